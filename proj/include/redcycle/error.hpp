#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace redcycle {

enum class ErrorKind {
  unknown_vertex,
  frozen_vertex,
  invalid_quiver,
  overflow,
  already_framed,
  not_framed,
  sign_coherence_violation,
  zero_row,
  internal_contradiction,
  cyclic_quiver,
  label_collision,
  negative_entry,
  not_reddening,
  non_identity_permutation,
  cycle_verification_failed,
  fork_start,
  unknown_name,
  parse_error,
  invalid_argument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::unknown_vertex: return "UnknownVertex";
    case ErrorKind::frozen_vertex: return "FrozenVertex";
    case ErrorKind::invalid_quiver: return "InvalidQuiver";
    case ErrorKind::overflow: return "Overflow";
    case ErrorKind::already_framed: return "AlreadyFramed";
    case ErrorKind::not_framed: return "NotFramed";
    case ErrorKind::sign_coherence_violation: return "SignCoherenceViolation";
    case ErrorKind::zero_row: return "ZeroRow";
    case ErrorKind::internal_contradiction: return "InternalContradiction";
    case ErrorKind::cyclic_quiver: return "CyclicQuiver";
    case ErrorKind::label_collision: return "LabelCollision";
    case ErrorKind::negative_entry: return "NegativeEntry";
    case ErrorKind::not_reddening: return "NotReddening";
    case ErrorKind::non_identity_permutation: return "NonIdentityPermutation";
    case ErrorKind::cycle_verification_failed: return "CycleVerificationFailed";
    case ErrorKind::fork_start: return "ForkStart";
    case ErrorKind::unknown_name: return "UnknownName";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace redcycle
