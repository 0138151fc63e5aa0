#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "redcycle/error.hpp"
#include "redcycle/framing.hpp"
#include "redcycle/int_matrix.hpp"
#include "redcycle/isomorphism.hpp"
#include "redcycle/quiver.hpp"
#include "redcycle/reddening.hpp"
#include "redcycle/sequence.hpp"

namespace redcycle {

/// Data for T -A-> H: the disjoint union of `t` and `h` plus a[t][h] arrows
/// from each tail vertex to each head vertex. Rows of `a` follow the
/// ascending labels of `t`, columns those of `h`.
struct ExtensionSpec {
  Quiver t;
  Quiver h;
  IntMatrix a;
};

inline Quiver triangular_extension(ExtensionSpec const& spec) {
  auto tl = spec.t.mutable_labels();
  auto hl = spec.h.mutable_labels();
  if (spec.t.has_frozen() || spec.h.has_frozen()) {
    throw Error(ErrorKind::already_framed, "extension factors must be unframed");
  }
  if (spec.a.rows() != tl.size() || spec.a.cols() != hl.size()) {
    throw Error(ErrorKind::invalid_quiver, "cross matrix has the wrong shape");
  }
  if (!spec.a.all_nonnegative()) {
    throw Error(ErrorKind::negative_entry, "cross matrix entries must be nonnegative");
  }
  Quiver q = disjoint_union(spec.t, spec.h);
  std::vector<Arrow> cross;
  for (std::size_t i = 0; i < tl.size(); ++i)
    for (std::size_t j = 0; j < hl.size(); ++j)
      if (spec.a(i, j) != 0) cross.push_back({tl[i], hl[j], spec.a(i, j)});
  return with_arrows(q, cross);
}

/// The block of `q` between the given row and column labels.
inline IntMatrix cross_block(Quiver const& q, std::vector<Label> const& rows,
                             std::vector<Label> const& cols) {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = q.b(rows[i], cols[j]);
  return m;
}

/// C_s(t) * a: the tail-to-head block after mutating the extension along a
/// sequence of tail vertices.
inline IntMatrix predicted_cross_block(ExtensionSpec const& spec, MutationSequence const& s) {
  for (Label v : s) {
    if (!spec.t.contains(v)) {
      throw Error(ErrorKind::unknown_vertex,
                  "sequence entry " + std::to_string(v) + " is not a tail vertex");
    }
  }
  return c_matrix(spec.t, s).values * spec.a;
}

/// The quiver with k isolated vertices labeled above every label of `q`.
inline Quiver isolated_vertices_above(Quiver const& q, std::size_t k) {
  Label top = 0;
  for (Label v : q.labels()) top = std::max(top, v);
  std::vector<Label> labels;
  for (std::size_t i = 1; i <= k; ++i) labels.push_back(top + static_cast<Label>(i));
  return Quiver::from_arrows(labels, {});
}

namespace detail {

inline std::uint64_t fnv1a(std::vector<Entry> const& data, std::vector<Label> const& labels) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int k = 0; k < 8; ++k) {
      h ^= (x >> (8 * k)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(labels.size());
  for (Label l : labels) mix(static_cast<std::uint64_t>(l));
  for (Entry e : data) mix(static_cast<std::uint64_t>(e));
  return h;
}

}  // namespace detail

/// Hash of the exact labeled quiver (labels and exchange matrix).
inline std::uint64_t labeled_hash(Quiver const& q) {
  return detail::fnv1a(q.matrix_data(), q.labels());
}

/// True when all quivers in the list are pairwise distinct, optionally
/// allowing the first and last entries to coincide.
inline bool pairwise_distinct(std::vector<Quiver> const& quivers, bool allow_closing = false) {
  std::size_t n = quivers.size();
  if (allow_closing && n >= 2 && quivers.front() == quivers.back()) --n;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto& bucket = seen[labeled_hash(quivers[i])];
    for (std::size_t j : bucket)
      if (quivers[j] == quivers[i]) return false;
    bucket.push_back(i);
  }
  return true;
}

/// Verdict on a candidate mutation cycle.
struct CycleReport {
  std::size_t length = 0;
  bool is_reduced = false;
  bool closes_equal = false;
  /// sigma with apply_permutation(q, sigma) equal to the final quiver.
  std::optional<Permutation> closes_iso;
  /// Reduced, closes with equality, and no quiver repeats before the end.
  bool simple = false;
  /// Every quiver along the way has |b_ij| >= 2 for all i != j.
  bool all_abundant = false;
  std::vector<std::uint64_t> trajectory_hashes;
};

inline CycleReport verify_cycle(Quiver const& q, MutationSequence const& s) {
  CycleReport r;
  std::vector<Quiver> path = trajectory(q, s);
  r.length = s.size();
  r.is_reduced = s.is_reduced();
  r.closes_equal = path.back() == q;
  r.closes_iso = r.closes_equal ? std::optional<Permutation>(Permutation{})
                                : find_isomorphism(q, path.back());
  r.all_abundant = true;
  for (auto const& p : path) {
    r.trajectory_hashes.push_back(labeled_hash(p));
    r.all_abundant = r.all_abundant && is_abundant(p);
  }
  r.simple = r.closes_equal && r.is_reduced && !s.empty() && pairwise_distinct(path, true);
  return r;
}

/// A built mutation cycle.
struct CycleConstruction {
  Quiver quiver;
  MutationSequence sequence;
  /// Associated permutations of the tail and head reddening sequences.
  Permutation tail_permutation;
  Permutation head_permutation;
  /// Number of M_T M_H rounds.
  std::int64_t rounds = 1;
};

namespace detail {

inline Permutation require_reddening(Quiver const& q, MutationSequence const& s,
                                     char const* which) {
  auto sigma = is_reddening(q, s);
  if (!sigma) {
    throw Error(ErrorKind::not_reddening,
                std::string(which) + " sequence " + s.to_string() + " is not reddening");
  }
  return *sigma;
}

inline void require_closes(Quiver const& q, MutationSequence const& s) {
  if (!(mutate_seq(q, s) == q)) {
    throw Error(ErrorKind::cycle_verification_failed,
                "constructed sequence does not return to the start quiver");
  }
}

}  // namespace detail

/// T -A-> H with the concatenation m_t m_h, for reddening sequences whose
/// associated permutations are both the identity.
inline CycleConstruction build_cycle_equal(Quiver const& t, MutationSequence const& m_t,
                                           Quiver const& h, MutationSequence const& m_h,
                                           IntMatrix const& a) {
  Permutation rho = detail::require_reddening(t, m_t, "tail");
  Permutation sigma = detail::require_reddening(h, m_h, "head");
  if (!rho.is_identity() || !sigma.is_identity()) {
    throw Error(ErrorKind::non_identity_permutation,
                "associated permutations are " + rho.to_string() + " and " + sigma.to_string());
  }
  CycleConstruction out{triangular_extension({t, h, a}), m_t + m_h, rho, sigma, 1};
  detail::require_closes(out.quiver, out.sequence);
  return out;
}

/// T -A-> H with M_T M_H rho(M_T) sigma(M_H) ... rho^(k-1)(M_T) sigma^(k-1)(M_H),
/// where k = lcm(order rho, order sigma).
inline CycleConstruction build_cycle_general(Quiver const& t, MutationSequence const& m_t,
                                             Quiver const& h, MutationSequence const& m_h,
                                             IntMatrix const& a) {
  Permutation rho = detail::require_reddening(t, m_t, "tail");
  Permutation sigma = detail::require_reddening(h, m_h, "head");
  std::int64_t k = std::lcm(rho.order(), sigma.order());
  MutationSequence s;
  Permutation rho_i;
  Permutation sigma_i;
  for (std::int64_t i = 0; i < k; ++i) {
    s += m_t.relabeled(rho_i);
    s += m_h.relabeled(sigma_i);
    rho_i = rho * rho_i;
    sigma_i = sigma * sigma_i;
  }
  CycleConstruction out{triangular_extension({t, h, a}), std::move(s), rho, sigma, k};
  detail::require_closes(out.quiver, out.sequence);
  return out;
}

/// mutate_seq(t, m) -A-> mutate_seq(h, n) with
/// reduce(m^-1 S_T m n^-1 S_H n), S_T and S_H the source sequences.
inline CycleConstruction build_acyclic_cycle(Quiver const& t, MutationSequence const& m,
                                             Quiver const& h, MutationSequence const& n,
                                             IntMatrix const& a) {
  MutationSequence s_t = source_sequence(t);
  MutationSequence s_h = source_sequence(h);
  Quiver tail = mutate_seq(t, m);
  Quiver head = mutate_seq(h, n);
  MutationSequence seq = reduce(conjugate_reddening(s_t, Permutation{}, m) +
                                conjugate_reddening(s_h, Permutation{}, n));
  CycleConstruction out{triangular_extension({tail, head, a}), std::move(seq), Permutation{},
                        Permutation{}, 1};
  detail::require_closes(out.quiver, out.sequence);
  return out;
}

/// Whether every quiver along `s` starting from T -a-> I_k is distinct,
/// where k = a.cols() and I_k sits on fresh labels above those of `t`.
inline bool is_distinguishing(Quiver const& t, MutationSequence const& s, IntMatrix const& a) {
  Quiver ik = isolated_vertices_above(t, a.cols());
  Quiver q = triangular_extension({t, ik, a});
  return pairwise_distinct(trajectory(q, s));
}

}  // namespace redcycle
