#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "redcycle/error.hpp"
#include "redcycle/permutation.hpp"

namespace redcycle {

/// A finite list of vertex labels to mutate at, left to right.
class MutationSequence {
 public:
  MutationSequence() = default;
  MutationSequence(std::initializer_list<Label> entries) : entries_(entries) {}
  explicit MutationSequence(std::vector<Label> entries) : entries_(std::move(entries)) {}

  /// Parses "1,2,3"; whitespace is ignored and the empty string is empty.
  static MutationSequence parse(std::string_view text) {
    std::vector<Label> out;
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw Error(ErrorKind::parse_error, "bad label in sequence: " + token);
        }
      }
      out.push_back(std::stoll(token));
      token.clear();
    };
    for (char c : text) {
      if (c == ',') {
        if (token.empty()) throw Error(ErrorKind::parse_error, "empty sequence entry");
        flush();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        token.push_back(c);
      }
    }
    flush();
    return MutationSequence(std::move(out));
  }

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::vector<Label> const& entries() const noexcept { return entries_; }
  Label operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
  [[nodiscard]] auto end() const noexcept { return entries_.end(); }

  void push_back(Label v) { entries_.push_back(v); }
  void pop_back() { entries_.pop_back(); }

  [[nodiscard]] MutationSequence reversed() const {
    return MutationSequence(std::vector<Label>(entries_.rbegin(), entries_.rend()));
  }

  /// Each entry replaced by its image under `sigma`.
  [[nodiscard]] MutationSequence relabeled(Permutation const& sigma) const {
    std::vector<Label> out;
    out.reserve(entries_.size());
    for (Label v : entries_) out.push_back(sigma(v));
    return MutationSequence(std::move(out));
  }

  [[nodiscard]] bool is_reduced() const noexcept {
    return std::adjacent_find(entries_.begin(), entries_.end()) == entries_.end();
  }

  MutationSequence& operator+=(MutationSequence const& rhs) {
    entries_.insert(entries_.end(), rhs.entries_.begin(), rhs.entries_.end());
    return *this;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(entries_[i]);
    }
    return s;
  }

  friend bool operator==(MutationSequence const&, MutationSequence const&) = default;
  friend auto operator<=>(MutationSequence const&, MutationSequence const&) = default;

 private:
  std::vector<Label> entries_;
};

inline MutationSequence operator+(MutationSequence lhs, MutationSequence const& rhs) {
  lhs += rhs;
  return lhs;
}

/// Cancels adjacent duplicates until none remain (stack algorithm).
inline MutationSequence reduce(MutationSequence const& s) {
  std::vector<Label> stack;
  for (Label v : s) {
    if (!stack.empty() && stack.back() == v) {
      stack.pop_back();
    } else {
      stack.push_back(v);
    }
  }
  return MutationSequence(std::move(stack));
}

}  // namespace redcycle
