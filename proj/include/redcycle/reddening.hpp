#pragma once

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "redcycle/error.hpp"
#include "redcycle/framing.hpp"
#include "redcycle/permutation.hpp"
#include "redcycle/quiver.hpp"
#include "redcycle/sequence.hpp"

namespace redcycle {

/// For an all-red C-matrix, the associated permutation read from C = -P:
/// sigma(i) is the row j with C[j][i] = -1. Absent if some row is green.
/// An all-red matrix that is not minus a permutation matrix is impossible
/// for a genuine framed state and is reported as an internal error.
inline std::optional<Permutation> reddening_permutation(CMatrix const& c) {
  std::size_t n = c.labels.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c.values(i, j) > 0) return std::nullopt;
  std::map<Label, Label> mapping;
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<std::size_t> hit;
    for (std::size_t row = 0; row < n; ++row) {
      Entry e = c.values(row, col);
      if (e == 0) continue;
      if (e != -1 || hit) {
        throw Error(ErrorKind::internal_contradiction,
                    "all-red C-matrix is not minus a permutation matrix");
      }
      hit = row;
    }
    if (!hit) {
      throw Error(ErrorKind::internal_contradiction, "all-red C-matrix has a zero column");
    }
    mapping[c.labels[col]] = c.labels[*hit];
  }
  return Permutation::from_map(mapping);
}

/// The associated permutation if `s` is a reddening sequence of `q`.
inline std::optional<Permutation> is_reddening(Quiver const& q, MutationSequence const& s) {
  return reddening_permutation(c_matrix(q, s));
}

/// The associated permutation if `s` is a maximal green sequence of `q`:
/// reddening, and every mutation happens at a green vertex.
inline std::optional<Permutation> is_maximal_green(Quiver const& q, MutationSequence const& s) {
  Quiver state = framed(q);
  for (Label v : s) {
    if (vertex_color(state, v) != Color::green) return std::nullopt;
    state = mutate(state, v);
  }
  auto sigma = reddening_permutation(c_matrix_of(state));
  if (sigma && !is_reddening(q, s)) {
    throw Error(ErrorKind::internal_contradiction, "maximal green sequence is not reddening");
  }
  return sigma;
}

/// reduce(m^-1 . s . sigma(m)): a reddening sequence of mutate_seq(q, m)
/// when `s` is reddening for `q` with associated permutation `sigma`.
inline MutationSequence conjugate_reddening(MutationSequence const& s, Permutation const& sigma,
                                            MutationSequence const& m) {
  return reduce(m.reversed() + s + m.relabeled(sigma));
}

/// A topological order of the mutable vertices (smallest available source
/// first). This is the reddening source sequence of an acyclic quiver.
inline MutationSequence source_sequence(Quiver const& q) {
  std::vector<Label> mut = q.mutable_labels();
  std::map<Label, int> indeg;
  for (Label v : mut) indeg[v] = 0;
  for (Label u : mut)
    for (Label v : mut)
      if (q.b(u, v) > 0) ++indeg[v];
  std::set<Label> ready;
  for (auto [v, d] : indeg)
    if (d == 0) ready.insert(v);
  MutationSequence out;
  while (!ready.empty()) {
    Label u = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(u);
    for (Label v : mut) {
      if (q.b(u, v) > 0 && --indeg[v] == 0) ready.insert(v);
    }
  }
  if (out.size() != mut.size()) {
    throw Error(ErrorKind::cyclic_quiver, "quiver has an oriented cycle");
  }
  return out;
}

}  // namespace redcycle
