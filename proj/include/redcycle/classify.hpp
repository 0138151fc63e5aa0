#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "redcycle/error.hpp"
#include "redcycle/isomorphism.hpp"
#include "redcycle/quiver.hpp"

namespace redcycle {

/// A twin pair {k, k'} (k < k') of a key, with b[k][k'].
struct KeyPair {
  Label k;
  Label k_prime;
  Entry b;

  friend bool operator==(KeyPair const&, KeyPair const&) = default;
  friend auto operator<=>(KeyPair const&, KeyPair const&) = default;
};

/// A twin pair {k, k'} of a pre-fork with a common point of return r.
struct PreforkPair {
  Label k;
  Label k_prime;
  Label r;

  friend bool operator==(PreforkPair const&, PreforkPair const&) = default;
  friend auto operator<=>(PreforkPair const&, PreforkPair const&) = default;
};

struct ClassificationReport {
  bool acyclic = false;
  bool abundant = false;
  std::set<Label> fork_returns;
  std::set<KeyPair> key_pairs;
  std::set<PreforkPair> prefork_pairs;

  [[nodiscard]] bool is_fork() const { return !fork_returns.empty(); }
  [[nodiscard]] bool is_key() const { return !key_pairs.empty(); }
  [[nodiscard]] bool is_prefork() const { return !prefork_pairs.empty(); }
};

namespace detail {

inline std::vector<Label> without(std::vector<Label> labels, Label v) {
  labels.erase(std::remove(labels.begin(), labels.end(), v), labels.end());
  return labels;
}

// Abundant, not acyclic, Q - r acyclic, and b_ji > max(b_ir, b_rj) along
// every path i -> r -> j.
inline bool fork_at(Quiver const& q, Label r, bool abundant, bool acyclic) {
  if (!abundant || acyclic || q.rank() < 3) return false;
  auto labels = q.mutable_labels();
  if (!is_acyclic(restrict(q, without(labels, r)))) return false;
  for (Label i : labels) {
    if (q.b(i, r) <= 0) continue;
    for (Label j : labels) {
      if (q.b(r, j) <= 0) continue;
      if (q.b(j, i) <= std::max(q.b(i, r), q.b(r, j))) return false;
    }
  }
  return true;
}

inline std::set<Label> fork_returns(Quiver const& q) {
  std::set<Label> out;
  bool abundant = is_abundant(q);
  bool acyclic = is_acyclic(q);
  for (Label r : q.mutable_labels())
    if (fork_at(q, r, abundant, acyclic)) out.insert(r);
  return out;
}

inline int sign(Entry e) { return (e > 0) - (e < 0); }

// Every other vertex meets k and k' with the same orientation.
inline bool twins_by_sign(Quiver const& q, Label k, Label kp) {
  for (Label j : q.mutable_labels()) {
    if (j == k || j == kp) continue;
    if (sign(q.b(j, k)) != sign(q.b(j, kp))) return false;
  }
  return true;
}

}  // namespace detail

/// True when `q` is a fork with some point of return.
inline bool is_fork(Quiver const& q) {
  Quiver m = mutable_part(q);
  bool abundant = is_abundant(m);
  bool acyclic = is_acyclic(m);
  for (Label r : m.mutable_labels())
    if (detail::fork_at(m, r, abundant, acyclic)) return true;
  return false;
}

namespace detail {

inline bool prefork_any(Quiver const& q) {
  auto labels = q.mutable_labels();
  if (labels.size() < 3) return false;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    for (std::size_t y = x + 1; y < labels.size(); ++y) {
      if (!twins_by_sign(q, labels[x], labels[y])) continue;
      auto rk = fork_returns(restrict(q, without(labels, labels[x])));
      if (rk.empty()) continue;
      auto rkp = fork_returns(restrict(q, without(labels, labels[y])));
      for (Label r : rk)
        if (rkp.contains(r)) return true;
    }
  }
  return false;
}

}  // namespace detail

/// True when `q` is a pre-fork for some twin pair.
inline bool is_prefork(Quiver const& q) { return detail::prefork_any(mutable_part(q)); }

/// Evaluates every predicate exhaustively over vertices and vertex pairs.
/// Frozen vertices, if any, are ignored.
inline ClassificationReport classify(Quiver const& input) {
  Quiver q = mutable_part(input);
  ClassificationReport rep;
  rep.acyclic = is_acyclic(q);
  rep.abundant = is_abundant(q);
  rep.fork_returns = detail::fork_returns(q);

  auto labels = q.mutable_labels();
  if (labels.size() >= 3) {
    for (std::size_t x = 0; x < labels.size(); ++x) {
      for (std::size_t y = x + 1; y < labels.size(); ++y) {
        Label k = labels[x];
        Label kp = labels[y];
        if (!detail::twins_by_sign(q, k, kp)) continue;
        Quiver minus_k = restrict(q, detail::without(labels, k));
        Quiver minus_kp = restrict(q, detail::without(labels, kp));
        if (rep.acyclic && is_abundant(minus_k) && is_abundant(minus_kp) &&
            is_acyclic(minus_k) && is_acyclic(minus_kp)) {
          rep.key_pairs.insert({k, kp, q.b(k, kp)});
        }
        auto rk = detail::fork_returns(minus_k);
        auto rkp = detail::fork_returns(minus_kp);
        for (Label r : rk)
          if (rkp.contains(r)) rep.prefork_pairs.insert({k, kp, r});
      }
    }
  }

  if (rep.is_fork() && !rep.abundant) {
    throw Error(ErrorKind::internal_contradiction, "fork that is not abundant");
  }
  if (rep.is_key() && !rep.acyclic) {
    throw Error(ErrorKind::internal_contradiction, "key that is not acyclic");
  }
  return rep;
}

/// How forkless_explore deduplicates visited quivers.
enum class ExploreMode {
  /// One node per isomorphism class.
  isomorphism,
  /// One node per labeled quiver.
  labeled,
};

struct ForklessResult {
  /// Canonical forms of every non-fork reached.
  std::set<std::string> forms;
  /// Visited non-forks in visiting order (one representative per node).
  std::vector<Quiver> nodes;
  /// Indices into `nodes` of the keys.
  std::vector<std::size_t> keys;
  /// True when the frontier emptied before the budget was hit.
  bool exhausted = false;
};

inline constexpr std::size_t kDefaultNodeBudget = 100000;

/// Breadth-first walk of the mutation graph from `q` that never enters a
/// fork or a pre-fork. A quiver with a twin pair joined by no arrows keeps
/// that pair for its whole class and is never abundant, so without the
/// pre-fork cut such classes have no forks at all. Within each depth the
/// frontier is processed in canonical-form order, so the result does not
/// depend on labels or hashing.
inline ForklessResult forkless_explore(Quiver const& q, std::size_t node_budget = kDefaultNodeBudget,
                                       ExploreMode mode = ExploreMode::isomorphism) {
  Quiver start = mutable_part(q);
  if (is_fork(start) || is_prefork(start)) {
    throw Error(ErrorKind::fork_start, "exploration must start outside the forks and pre-forks");
  }

  ForklessResult res;
  std::set<std::string> seen_forks;
  std::map<std::vector<Entry>, bool> seen_labeled;

  auto visit = [&](Quiver const& x, std::string const& form) -> bool {
    if (mode == ExploreMode::isomorphism) return res.forms.insert(form).second;
    res.forms.insert(form);
    return seen_labeled.emplace(x.matrix_data(), true).second;
  };

  std::vector<std::pair<std::string, Quiver>> frontier;
  std::string f0 = canonical_form(start);
  visit(start, f0);
  frontier.emplace_back(f0, start);

  while (!frontier.empty()) {
    std::vector<std::pair<std::string, Quiver>> next;
    for (auto& [form, x] : frontier) {
      if (res.nodes.size() >= node_budget) return res;
      if (classify(x).is_key()) res.keys.push_back(res.nodes.size());
      res.nodes.push_back(x);
      for (Label v : x.mutable_labels()) {
        Quiver y = mutate(x, v);
        std::string fy = canonical_form(y);
        if (seen_forks.contains(fy)) continue;
        if (is_fork(y) || is_prefork(y)) {
          seen_forks.insert(fy);
          continue;
        }
        if (visit(y, fy)) next.emplace_back(std::move(fy), std::move(y));
      }
    }
    std::stable_sort(next.begin(), next.end(), [](auto const& a, auto const& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second.matrix_data() < b.second.matrix_data();
    });
    frontier = std::move(next);
  }
  res.exhausted = true;
  return res;
}

}  // namespace redcycle
