#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "redcycle/redcycle.hpp"

namespace testsupport {

using namespace redcycle;

// Arrow-list quiver used as an oracle: counts[(u, w)] > 0 means that many
// arrows u -> w.
struct ArrowQuiver {
  std::vector<Label> vertices;
  std::set<Label> frozen;
  std::map<std::pair<Label, Label>, Entry> counts;

  Entry arrows(Label u, Label w) const {
    auto it = counts.find({u, w});
    return it == counts.end() ? 0 : it->second;
  }
};

inline ArrowQuiver to_arrow_quiver(Quiver const& q) {
  ArrowQuiver out;
  out.vertices = q.labels();
  for (Label f : q.frozen_labels()) out.frozen.insert(f);
  for (auto const& a : q.arrows()) out.counts[{a.from, a.to}] = a.count;
  return out;
}

// Three-step mutation: add a composite for each path u -> v -> w, reverse
// arrows at v, cancel 2-cycles, drop frozen-frozen arrows.
inline ArrowQuiver oracle_mutate(ArrowQuiver const& q, Label v) {
  std::map<std::pair<Label, Label>, Entry> c = q.counts;
  for (Label u : q.vertices) {
    for (Label w : q.vertices) {
      if (u == w || u == v || w == v) continue;
      Entry add = q.arrows(u, v) * q.arrows(v, w);
      if (add > 0) c[{u, w}] += add;
    }
  }
  std::map<std::pair<Label, Label>, Entry> r;
  for (auto const& [e, n] : c) {
    if (n == 0) continue;
    if (e.first == v || e.second == v) {
      r[{e.second, e.first}] += n;
    } else {
      r[e] += n;
    }
  }
  auto get = [&r](Label u, Label w) {
    auto it = r.find({u, w});
    return it == r.end() ? Entry{0} : it->second;
  };
  ArrowQuiver out = q;
  out.counts.clear();
  for (std::size_t x = 0; x < q.vertices.size(); ++x)
    for (std::size_t y = x + 1; y < q.vertices.size(); ++y) {
      Label u = q.vertices[x];
      Label w = q.vertices[y];
      if (q.frozen.contains(u) && q.frozen.contains(w)) continue;
      Entry net = get(u, w) - get(w, u);
      if (net > 0) out.counts[{u, w}] = net;
      if (net < 0) out.counts[{w, u}] = -net;
    }
  return out;
}

inline bool same(ArrowQuiver const& a, Quiver const& q) {
  auto b = to_arrow_quiver(q);
  return a.vertices == b.vertices && a.frozen == b.frozen && a.counts == b.counts;
}

// Oracle C-matrix: frame by hand, mutate with the oracle, read arrows to
// the frozen copies.
inline std::vector<std::vector<Entry>> oracle_c_matrix(Quiver const& q, MutationSequence const& s) {
  ArrowQuiver a = to_arrow_quiver(q);
  Label top = *std::max_element(a.vertices.begin(), a.vertices.end());
  Label offset = 1;
  while (offset <= top) offset *= 10;
  offset *= 10;
  std::vector<Label> mut = a.vertices;
  for (Label v : mut) {
    a.vertices.push_back(v + offset);
    a.frozen.insert(v + offset);
    a.counts[{v, v + offset}] = 1;
  }
  std::sort(a.vertices.begin(), a.vertices.end());
  for (Label v : s) a = oracle_mutate(a, v);
  std::vector<std::vector<Entry>> c(mut.size(), std::vector<Entry>(mut.size(), 0));
  for (std::size_t i = 0; i < mut.size(); ++i)
    for (std::size_t j = 0; j < mut.size(); ++j)
      c[i][j] = a.arrows(mut[i], mut[j] + offset) - a.arrows(mut[j] + offset, mut[i]);
  return c;
}

inline std::vector<std::vector<Entry>> rows_of(IntMatrix const& m) {
  std::vector<std::vector<Entry>> out(m.rows(), std::vector<Entry>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline Entry uniform(std::mt19937_64& rng, Entry lo, Entry hi) {
  return std::uniform_int_distribution<Entry>(lo, hi)(rng);
}

// Random labels: n distinct positive integers, not necessarily contiguous.
inline std::vector<Label> random_labels(std::mt19937_64& rng, std::size_t n) {
  std::set<Label> s;
  while (s.size() < n) s.insert(uniform(rng, 1, 3 * static_cast<Entry>(n)));
  return {s.begin(), s.end()};
}

inline Quiver random_quiver(std::mt19937_64& rng, std::size_t n, Entry max_weight) {
  auto labels = random_labels(rng, n);
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Entry w = uniform(rng, -max_weight, max_weight);
      if (w > 0) arrows.push_back({labels[i], labels[j], w});
      if (w < 0) arrows.push_back({labels[j], labels[i], -w});
    }
  return Quiver::from_arrows(labels, arrows);
}

// Arrows only go forward in a random order of the labels.
inline Quiver random_acyclic(std::mt19937_64& rng, std::size_t n, Entry min_weight, Entry max_weight) {
  auto labels = random_labels(rng, n);
  std::vector<Label> order = labels;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Entry w = uniform(rng, min_weight, max_weight);
      if (w > 0) arrows.push_back({order[i], order[j], w});
    }
  return Quiver::from_arrows(labels, arrows);
}

inline MutationSequence random_sequence(std::mt19937_64& rng, std::vector<Label> const& labels,
                                        std::size_t len, bool reduced = true) {
  MutationSequence s;
  if (reduced && labels.size() < 2) len = std::min(len, labels.size());
  while (s.size() < len) {
    Label v = labels[static_cast<std::size_t>(uniform(rng, 0, static_cast<Entry>(labels.size()) - 1))];
    if (reduced && !s.empty() && s.entries().back() == v) continue;
    s.push_back(v);
  }
  return s;
}

inline Permutation random_permutation(std::mt19937_64& rng, std::vector<Label> const& labels) {
  std::vector<Label> image = labels;
  std::shuffle(image.begin(), image.end(), rng);
  std::map<Label, Label> m;
  for (std::size_t i = 0; i < labels.size(); ++i) m[labels[i]] = image[i];
  return Permutation::from_map(m);
}

// A fork with point of return r: the other vertices are split into
// out-neighbours J and in-neighbours I of r, ordered J before I, all pairs
// joined by at least two arrows, and b_ji > max(b_ir, b_rj).
struct RandomFork {
  Quiver q;
  Label r;
};

inline RandomFork random_fork(std::mt19937_64& rng, std::size_t n) {
  auto labels = random_labels(rng, n);
  std::vector<Label> order = labels;
  std::shuffle(order.begin(), order.end(), rng);
  Label r = order.back();
  order.pop_back();
  std::size_t split = static_cast<std::size_t>(uniform(rng, 1, static_cast<Entry>(order.size()) - 1));
  std::vector<Label> outs(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(split));
  std::vector<Label> ins(order.begin() + static_cast<std::ptrdiff_t>(split), order.end());
  std::map<std::pair<Label, Label>, Entry> w;
  for (Label i : ins) w[{i, r}] = uniform(rng, 2, 5);
  for (Label j : outs) w[{r, j}] = uniform(rng, 2, 5);
  for (std::size_t x = 0; x < order.size(); ++x)
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      Label a = order[x];
      Label b = order[y];
      Entry lo = 2;
      if (w.contains({r, a}) && w.contains({b, r})) lo = std::max(w[{b, r}], w[{r, a}]) + 1;
      w[{a, b}] = uniform(rng, lo, lo + 4);
    }
  std::vector<Arrow> arrows;
  for (auto const& [e, c] : w) arrows.push_back({e.first, e.second, c});
  return {Quiver::from_arrows(labels, arrows), r};
}

}  // namespace testsupport
