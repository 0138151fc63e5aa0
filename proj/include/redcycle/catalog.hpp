#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "redcycle/classify.hpp"
#include "redcycle/error.hpp"
#include "redcycle/extension.hpp"
#include "redcycle/framing.hpp"
#include "redcycle/isomorphism.hpp"
#include "redcycle/quiver.hpp"
#include "redcycle/reddening.hpp"
#include "redcycle/search.hpp"
#include "redcycle/sequence.hpp"

namespace redcycle::catalog {

/// Monic Chebyshev values: u_{-1} = 0, u_0 = 1, u_k = a u_{k-1} - u_{k-2}.
inline Entry chebyshev_u(std::int64_t k, Entry a) {
  if (k < -1) throw Error(ErrorKind::invalid_argument, "chebyshev index below -1");
  Entry prev = 0;
  Entry cur = 1;
  if (k == -1) return prev;
  for (std::int64_t i = 1; i <= k; ++i) {
    Entry next = checked_sub(checked_mul(a, cur), prev);
    prev = cur;
    cur = next;
  }
  if (a >= 2 && cur <= 0) {
    throw Error(ErrorKind::internal_contradiction, "chebyshev value is not positive");
  }
  return cur;
}

/// Some directed 4-cycle a -> b -> c -> d -> a on distinct mutable vertices.
inline bool has_oriented_four_cycle(Quiver const& q) {
  auto l = q.mutable_labels();
  std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || q.b(l[a], l[b]) <= 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b || q.b(l[b], l[c]) <= 0) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (q.b(l[c], l[d]) > 0 && q.b(l[d], l[a]) > 0) return true;
        }
      }
    }
  return false;
}

struct FordyMarsh {
  Quiver quiver;
  MutationSequence cycle;
  Permutation sigma;
  Entry alpha;
  Entry beta;
  Entry gamma;
};

/// The 4-vertex quiver 1 -a-> 2, 1 -c-> 3, 2 -b-> 3, 3 -alpha-> 4,
/// 4 -beta-> 1, 2 -gamma-> 4 with Chebyshev weights, and its cycle
/// L, 4, sigma(L^-1), 3 where L = 2,1,2,... has length k.
inline FordyMarsh fordy_marsh(Entry a, Entry b, Entry c, std::int64_t k) {
  if (a < 2 || b < 2 || c < 2 || k < 1) {
    throw Error(ErrorKind::invalid_argument, "fordy_marsh needs a, b, c >= 2 and k >= 1");
  }
  FordyMarsh fm;
  fm.alpha = checked_sub(chebyshev_u(k, a), chebyshev_u(k - 2, a));
  fm.beta = checked_add(checked_mul(chebyshev_u(k - 1, a), b), checked_mul(chebyshev_u(k, a), c));
  fm.gamma = checked_add(checked_mul(chebyshev_u(k - 2, a), b), checked_mul(chebyshev_u(k - 1, a), c));
  fm.quiver = Quiver::from_arrows(
      {1, 2, 3, 4},
      {{1, 2, a}, {1, 3, c}, {2, 3, b}, {3, 4, fm.alpha}, {4, 1, fm.beta}, {2, 4, fm.gamma}});
  fm.sigma = Permutation::from_cycles({{1, 2}, {3, 4}});
  MutationSequence l;
  for (std::int64_t i = 0; i < k; ++i) l.push_back(i % 2 == 0 ? 2 : 1);
  fm.cycle = l;
  fm.cycle.push_back(4);
  fm.cycle += l.reversed().relabeled(fm.sigma);
  fm.cycle.push_back(3);
  return fm;
}

/// Label of row r, column c (1-based) in a grid with `cols` columns.
inline Label grid_label(std::int64_t r, std::int64_t c, std::int64_t cols) {
  return (r - 1) * cols + c;
}

/// Triangulated k x l grid: arrows point left along rows, up along columns,
/// and down-right along diagonals.
inline Quiver grid_quiver(std::int64_t k, std::int64_t l) {
  if (k < 1 || l < 1) throw Error(ErrorKind::invalid_argument, "grid sides must be positive");
  std::vector<Label> labels;
  std::vector<Arrow> arrows;
  for (std::int64_t r = 1; r <= k; ++r) {
    for (std::int64_t c = 1; c <= l; ++c) {
      labels.push_back(grid_label(r, c, l));
      if (c < l) arrows.push_back({grid_label(r, c + 1, l), grid_label(r, c, l), 1});
      if (r < k) arrows.push_back({grid_label(r + 1, c, l), grid_label(r, c, l), 1});
      if (r < k && c < l) arrows.push_back({grid_label(r, c, l), grid_label(r + 1, c + 1, l), 1});
    }
  }
  return Quiver::from_arrows(labels, arrows);
}

/// For i = 1..l: every row from the bottom up, columns i down to 1.
inline MutationSequence grid_reddening(std::int64_t k, std::int64_t l) {
  if (k < 1 || l < 1) throw Error(ErrorKind::invalid_argument, "grid sides must be positive");
  MutationSequence s;
  for (std::int64_t i = 1; i <= l; ++i)
    for (std::int64_t r = k; r >= 1; --r)
      for (std::int64_t c = i; c >= 1; --c) s.push_back(grid_label(r, c, l));
  return s;
}

/// Vertex names of T_k. v_i, u_i (i < k-2) and w_i (i < k-3) are 1-based.
struct SphereLabels {
  std::vector<Label> v;
  std::vector<Label> u;
  std::vector<Label> w;
  Label s;
  Label t;
  Label s_bar;
  Label t_bar;
};

/// v_1.., u_1.., w_1.., s, t, s_bar, t_bar numbered consecutively from
/// offset + 1.
inline SphereLabels sphere_labels(std::int64_t k, Label offset = 0) {
  if (k < 4) throw Error(ErrorKind::invalid_argument, "punctured sphere needs k >= 4");
  SphereLabels n;
  Label next = offset;
  for (std::int64_t i = 0; i < k - 3; ++i) n.v.push_back(++next);
  for (std::int64_t i = 0; i < k - 3; ++i) n.u.push_back(++next);
  for (std::int64_t i = 0; i < k - 4; ++i) n.w.push_back(++next);
  n.s = ++next;
  n.t = ++next;
  n.s_bar = ++next;
  n.t_bar = ++next;
  return n;
}

inline Quiver punctured_sphere_quiver(std::int64_t k, Label offset = 0) {
  SphereLabels n = sphere_labels(k, offset);
  std::size_t m = n.v.size();
  std::vector<Arrow> arrows;
  arrows.push_back({n.s, n.v[0], 1});
  for (std::size_t i = 0; i + 1 < m; ++i) arrows.push_back({n.v[i], n.v[i + 1], 1});
  arrows.push_back({n.v[m - 1], n.t, 1});
  arrows.push_back({n.t, n.u[m - 1], 1});
  for (std::size_t i = m - 1; i > 0; --i) arrows.push_back({n.u[i], n.u[i - 1], 1});
  arrows.push_back({n.u[0], n.s, 1});
  arrows.push_back({n.v[0], n.s_bar, 1});
  arrows.push_back({n.s_bar, n.u[0], 1});
  arrows.push_back({n.u[m - 1], n.t_bar, 1});
  arrows.push_back({n.t_bar, n.v[m - 1], 1});
  for (std::size_t i = 0; i < n.w.size(); ++i) {
    arrows.push_back({n.v[i + 1], n.w[i], 1});
    arrows.push_back({n.w[i], n.v[i], 1});
    arrows.push_back({n.u[i], n.w[i], 1});
    arrows.push_back({n.w[i], n.u[i + 1], 1});
  }
  std::vector<Label> labels;
  for (Label x = offset + 1; x <= offset + 3 * (k - 2); ++x) labels.push_back(x);
  return Quiver::from_arrows(labels, arrows);
}

/// A quiver with a reddening sequence and its associated permutation.
struct Reddened {
  Quiver quiver;
  MutationSequence sequence;
  Permutation permutation;
};

/// T_k with the maximal green sequence M'_ind M_cycles M_ind M_X and the
/// permutation (u_1, v_1, s_bar, s)(t, t_bar) prod (v_i, u_i).
inline Reddened punctured_sphere(std::int64_t k, Label offset = 0) {
  SphereLabels n = sphere_labels(k, offset);
  std::size_t m = n.v.size();
  MutationSequence s;
  for (Label x : n.w) s.push_back(x);
  s.push_back(n.s_bar);
  s.push_back(n.t_bar);
  for (std::size_t i = 0; i < m; ++i) {
    s.push_back(n.u[i]);
    s.push_back(n.v[i]);
  }
  for (Label x : n.w) s.push_back(x);
  s.push_back(n.s);
  s.push_back(n.t);
  for (Label x : n.v) s.push_back(x);
  s.push_back(n.t_bar);
  for (std::size_t i = m; i > 0; --i) s.push_back(n.u[i - 1]);
  s.push_back(n.s_bar);
  for (std::size_t i = 1; i < m; ++i) s.push_back(n.u[i]);
  s.push_back(n.t_bar);
  for (std::size_t i = m; i > 0; --i) s.push_back(n.v[i - 1]);

  std::vector<std::vector<Label>> cycles{{n.u[0], n.v[0], n.s_bar, n.s}, {n.t, n.t_bar}};
  for (std::size_t i = 1; i < m; ++i) cycles.push_back({n.v[i], n.u[i]});
  return {punctured_sphere_quiver(k, offset), std::move(s), Permutation::from_cycles(cycles)};
}

/// 3 -2a-> 4, 1 -a-> 3, 2 -> 3, 4 -> 1, 1 -a-> 2, 4 -a-> 2. a = 1 is the
/// once-punctured torus.
inline Quiver dreaded_torus(Entry a, Label offset = 0) {
  if (a < 1) throw Error(ErrorKind::invalid_argument, "dreaded torus needs a >= 1");
  Label o = offset;
  return Quiver::from_arrows({o + 1, o + 2, o + 3, o + 4},
                             {{o + 3, o + 4, checked_mul(2, a)},
                              {o + 1, o + 3, a},
                              {o + 2, o + 3, 1},
                              {o + 4, o + 1, 1},
                              {o + 1, o + 2, a},
                              {o + 4, o + 2, a}});
}

/// 1 -a-> 2 -b-> 3 -a-> 4 -b-> 1.
inline Quiver box_quiver(Entry a, Entry b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::invalid_argument, "box weights must be positive");
  return Quiver::from_arrows({1, 2, 3, 4}, {{1, 2, a}, {2, 3, b}, {3, 4, a}, {4, 1, b}});
}

// Fixed quivers.

inline Quiver quiver_k() {
  return Quiver::from_arrows({1, 2, 3}, {{1, 2, 35}, {2, 3, 4}, {3, 1, 9}});
}

inline Quiver quiver_k_prime() {
  return Quiver::from_arrows({1, 2, 3}, {{1, 2, 1}, {2, 3, 4}, {1, 3, 5}});
}

inline Quiver oriented_four_cycle() {
  return Quiver::from_arrows({1, 2, 3, 4}, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 1, 1}});
}

inline Quiver r33() { return grid_quiver(3, 3); }

inline Quiver r_prime() {
  return Quiver::from_arrows({1, 2, 3, 4, 5, 6, 7, 8},
                             {{2, 6, 1}, {3, 2, 1}, {4, 8, 1}, {1, 2, 1}, {1, 4, 1},
                              {1, 5, 1}, {6, 1, 1}, {6, 3, 1}, {7, 4, 1}, {8, 1, 1},
                              {8, 7, 1}, {5, 6, 1}, {5, 8, 1}});
}

inline Quiver r_double_prime() {
  return Quiver::from_arrows({1, 2, 3, 4, 5, 7, 8, 9},
                             {{1, 2, 1}, {3, 1, 1}, {4, 8, 1}, {4, 1, 1}, {5, 4, 1},
                              {5, 9, 1}, {2, 5, 1}, {2, 3, 1}, {7, 4, 1}, {8, 5, 1},
                              {8, 7, 1}, {9, 2, 1}, {9, 8, 1}});
}

inline Quiver banff_q(Label offset = 0) {
  Label o = offset;
  return Quiver::from_arrows({o + 1, o + 2, o + 3, o + 4, o + 5, o + 6},
                             {{o + 1, o + 2, 2}, {o + 2, o + 3, 1}, {o + 2, o + 4, 1},
                              {o + 3, o + 1, 1}, {o + 3, o + 4, 1}, {o + 4, o + 1, 1},
                              {o + 4, o + 5, 1}, {o + 5, o + 3, 1}, {o + 6, o + 5, 1}});
}

/// The 12-vertex half-finite quiver with vertex 13, 14, 15 attached as an
/// oriented 3-cycle fed by 1, 2, 3.
inline Quiver half_finite_15() {
  std::vector<Label> labels;
  for (Label x = 1; x <= 15; ++x) labels.push_back(x);
  return Quiver::from_arrows(
      labels, {{4, 7, 2},  {10, 7, 1}, {10, 1, 1}, {4, 1, 3},  {2, 5, 3},   {8, 5, 2},
               {2, 11, 1}, {8, 11, 1}, {6, 9, 2},  {12, 3, 1}, {12, 9, 1},  {6, 3, 3},
               {1, 2, 1},  {3, 2, 1},  {7, 8, 1},  {9, 8, 1},  {5, 4, 1},   {5, 6, 1},
               {11, 10, 1}, {11, 12, 1}, {1, 13, 1}, {2, 14, 1}, {3, 15, 1}, {13, 14, 1},
               {14, 15, 1}, {15, 13, 1}});
}

inline Quiver half_finite_12() {
  std::vector<Label> keep;
  for (Label x = 1; x <= 12; ++x) keep.push_back(x);
  return restrict(half_finite_15(), keep);
}

inline Quiver fork_example() {
  return Quiver::from_arrows({1, 2, 3}, {{2, 1, 3}, {3, 2, 8}, {1, 3, 2}});
}

inline Quiver key_example() {
  return Quiver::from_arrows({1, 2, 3, 4}, {{2, 1, 2}, {2, 3, 4}, {1, 4, 2}, {2, 4, 3}, {3, 4, 4}});
}

inline Quiver prefork_example() {
  return Quiver::from_arrows({1, 2, 3, 4}, {{2, 1, 2}, {2, 3, 4}, {1, 4, 8}, {4, 2, 3}, {3, 4, 5}});
}

inline Quiver infinite_reduced_key() {
  return Quiver::from_arrows({1, 2, 3, 4}, {{2, 1, 2}, {2, 3, 2}, {4, 1, 2}, {2, 4, 2}, {4, 3, 2}});
}

/// One outcome of a self-check.
struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// A named bundle of quivers and sequences with checks that recompute
/// every stated value.
struct PaperItem {
  std::string name;
  std::string title;
  std::vector<std::pair<std::string, Quiver>> quivers;
  std::vector<std::pair<std::string, MutationSequence>> sequences;
  std::vector<std::pair<std::string, std::string>> expected;
  std::function<std::vector<Check>()> verify;

  [[nodiscard]] Quiver const& quiver(std::string_view key) const {
    for (auto const& [k, q] : quivers)
      if (k == key) return q;
    throw Error(ErrorKind::unknown_name, "item " + name + " has no quiver " + std::string(key));
  }

  [[nodiscard]] MutationSequence const& sequence(std::string_view key) const {
    for (auto const& [k, s] : sequences)
      if (k == key) return s;
    throw Error(ErrorKind::unknown_name, "item " + name + " has no sequence " + std::string(key));
  }
};

namespace detail {

inline std::string perm_or_none(std::optional<Permutation> const& p) {
  return p ? p->to_string() : std::string("none");
}

inline Check check_reddening(std::string name, Quiver const& q, MutationSequence const& s,
                             Permutation const& want) {
  auto got = is_reddening(q, s);
  return {std::move(name), got && *got == want, "got " + perm_or_none(got) + ", want " + want.to_string()};
}

inline Check check_green(std::string name, Quiver const& q, MutationSequence const& s,
                         Permutation const& want) {
  auto got = is_maximal_green(q, s);
  return {std::move(name), got && *got == want, "got " + perm_or_none(got) + ", want " + want.to_string()};
}

inline Check check_simple_cycle(std::string name, Quiver const& q, MutationSequence const& s,
                                std::size_t length) {
  auto r = verify_cycle(q, s);
  bool ok = r.closes_equal && r.simple && r.length == length;
  return {std::move(name), ok,
          "length " + std::to_string(r.length) + (r.closes_equal ? ", closes" : ", does not close") +
              (r.simple ? ", simple" : ", not simple")};
}

inline Check check_closes(std::string name, Quiver const& q, MutationSequence const& s,
                          std::size_t length) {
  auto r = verify_cycle(q, s);
  bool ok = r.closes_equal && r.length == length;
  return {std::move(name), ok,
          "length " + std::to_string(r.length) + (r.closes_equal ? ", closes" : ", does not close")};
}

inline Check check_true(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, std::move(detail)};
}

template <class F>
Check guarded(std::string name, F&& f) {
  try {
    return f();
  } catch (Error const& e) {
    return {std::move(name), false, e.what()};
  }
}

inline IntMatrix single_column(std::vector<Label> const& rows, std::vector<Label> const& cols,
                               std::vector<Arrow> const& cross) {
  IntMatrix a(rows.size(), cols.size());
  for (auto const& ar : cross) {
    auto r = std::find(rows.begin(), rows.end(), ar.from) - rows.begin();
    auto c = std::find(cols.begin(), cols.end(), ar.to) - cols.begin();
    a(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) += ar.count;
  }
  return a;
}

inline std::vector<Label> range(Label lo, Label hi) {
  std::vector<Label> out;
  for (Label x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

inline MutationSequence seq(std::string_view text) { return MutationSequence::parse(text); }
inline Permutation perm(std::string_view text) { return Permutation::parse(text); }

// Sources and sinks of a quiver, as a pair of label sets.
inline std::pair<std::set<Label>, std::set<Label>> sources_and_sinks(Quiver const& q) {
  std::set<Label> src;
  std::set<Label> snk;
  for (Label v : q.mutable_labels()) {
    bool in = false;
    bool out = false;
    for (Label w : q.mutable_labels()) {
      in = in || q.b(w, v) > 0;
      out = out || q.b(v, w) > 0;
    }
    if (!in) src.insert(v);
    if (!out) snk.insert(v);
  }
  return {src, snk};
}

}  // namespace detail

/// A_2 on {5, 6} feeding the oriented 4-cycle.
struct Fig1Data {
  Quiver tail;
  Quiver head;
  IntMatrix a;
};

inline Fig1Data fig1_data() {
  return {Quiver::from_arrows({5, 6}, {{5, 6, 1}}), oriented_four_cycle(),
          IntMatrix::from_rows({{7, 0, 0, 2}, {0, 5, 5, 0}})};
}

/// Two dreaded tori on 1..4 and 5..8 with 2 -> 5, 3 -> 7, 4 -> 8.
inline ExtensionSpec two_tori_spec() {
  return {dreaded_torus(1), dreaded_torus(1, 4),
          detail::single_column(detail::range(1, 4), detail::range(5, 8),
                                {{2, 5, 1}, {3, 7, 1}, {4, 8, 1}})};
}

/// The two-tori quiver feeding a third torus on 9..12 via 6 -> 11, 6 -> 9,
/// 8 -> 11.
inline ExtensionSpec three_tori_spec() {
  return {triangular_extension(two_tori_spec()), dreaded_torus(1, 8),
          detail::single_column(detail::range(1, 8), detail::range(9, 12),
                                {{6, 11, 1}, {6, 9, 1}, {8, 11, 1}})};
}

/// R_{3,3} feeding T_5 (relabeled 10..18).
inline ExtensionSpec t5_r33_spec() {
  SphereLabels n = sphere_labels(5, 9);
  std::vector<Arrow> cross{{1, n.t, 1},     {1, n.u[0], 1},     {1, n.w[0], 1}, {2, n.v[0], 1},
                           {3, n.s_bar, 1}, {3, n.w[0], 1},     {4, n.t_bar, 1}, {5, n.v[0], 1},
                           {5, n.t_bar, 1}, {6, n.s, 1},        {7, n.v[1], 1}, {7, n.w[0], 1},
                           {8, n.w[0], 1}};
  return {r33(), punctured_sphere_quiver(5, 9),
          detail::single_column(detail::range(1, 9), detail::range(10, 18), cross)};
}

/// R'' feeding the Banff quiver relabeled 10..15.
inline ExtensionSpec banff_extension_spec() {
  return {r_double_prime(), banff_q(9),
          detail::single_column({1, 2, 3, 4, 5, 7, 8, 9}, detail::range(10, 15),
                                {{2, 12, 1}, {3, 11, 3}, {3, 15, 1}, {5, 12, 1}, {8, 11, 3},
                                 {8, 15, 1}})};
}

inline MutationSequence banff_m() { return detail::seq("2,5,4,1,4,2,1,6,5,4,5,3"); }
inline MutationSequence banff_s() { return detail::seq("4,1,3,2,3,6,1,5,3,1"); }
/// reduce(M S M^-1).
inline MutationSequence banff_n() { return reduce(banff_m() + banff_s() + banff_m().reversed()); }

inline MutationSequence half_finite_s() {
  MutationSequence white = detail::seq("2,4,6,8,10,12");
  MutationSequence black = detail::seq("1,3,5,7,9,11");
  return white + black + white + black;
}

std::vector<std::string> item_names();
PaperItem paper_item(std::string_view name);

namespace detail {

using Builder = PaperItem (*)();

inline PaperItem item_fig1() {
  auto d = fig1_data();
  Quiver q = triangular_extension({d.tail, d.head, d.a});
  MutationSequence cycle = seq("5,6,1,2,1,3,2,4,2,1");
  MutationSequence m_h = seq("1,2,1,3,2,4,2,1");
  PaperItem it{"fig1_extension", "A_2 on {5,6} feeding an oriented 4-cycle", {}, {}, {}, {}};
  it.quivers = {{"Q", q}, {"T", d.tail}, {"H", d.head}};
  it.sequences = {{"cycle", cycle}, {"M_T", seq("5,6")}, {"M_H", m_h}};
  it.expected = {{"cycle", "closes with equality, simple, length 10"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(guarded("cycle", [&] { return check_simple_cycle("cycle", q, cycle, 10); }));
    out.push_back(guarded("M_H reddening",
                          [&] { return check_reddening("M_H reddening", d.head, m_h, Permutation{}); }));
    out.push_back(guarded("equal construction", [&] {
      auto c = build_cycle_equal(d.tail, seq("5,6"), d.head, m_h, d.a);
      return check_true("equal construction", c.quiver == q && c.sequence == cycle,
                        c.sequence.to_string());
    }));
    return out;
  };
  return it;
}

inline PaperItem item_non_equal() {
  Quiver left = Quiver::from_arrows({1, 2, 3}, {{1, 2, 4}, {2, 3, 4}, {3, 1, 4}});
  Quiver right = Quiver::from_arrows({1, 2, 3}, {{3, 2, 4}, {2, 1, 4}, {1, 3, 4}});
  PaperItem it{"non_equal_pair", "two isomorphic quivers that are not equal", {}, {}, {}, {}};
  it.quivers = {{"left", left}, {"right", right}};
  it.expected = {{"isomorphism", "(1,2)"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(check_true("not equal", !(left == right)));
    out.push_back(check_true("isomorphism", apply_permutation(left, perm("(1,2)")) == right));
    out.push_back(check_true("canonical forms agree", canonical_form(left) == canonical_form(right)));
    return out;
  };
  return it;
}

inline PaperItem item_key_k() {
  Quiver k = quiver_k();
  Quiver kp = quiver_k_prime();
  MutationSequence m = seq("3,2,1,2,3,2,3");
  MutationSequence mp = seq("3,2,1,2,3,1,2,1,2,3");
  IntMatrix a = IntMatrix::from_rows({{2, 4, 3}});
  Quiver t4 = Quiver::from_arrows({4}, {});
  PaperItem it{"key_K_and_Kprime", "K = mu_{2,3}(K') and its two reddening sequences", {}, {}, {}, {}};
  it.quivers = {{"K", k}, {"Kprime", kp}, {"key_triangular", triangular_extension({t4, k, a})}};
  it.sequences = {{"M", m}, {"Mprime", mp}, {"to_K", seq("2,3")}, {"triangular_cycle", seq("4,3,2,1,2,3,2,3")}};
  it.expected = {{"M", "()"}, {"Mprime", "(1,2)"}, {"triangular_cycle", "closes with equality, simple"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(guarded("K from K'", [&] {
      return check_true("K from K'", mutate_seq(kp, seq("2,3")) == k);
    }));
    out.push_back(guarded("M", [&] { return check_reddening("M", k, m, Permutation{}); }));
    out.push_back(guarded("Mprime", [&] { return check_reddening("Mprime", k, mp, perm("(1,2)")); }));
    out.push_back(check_true("Mprime is a reduction",
                             reduce(seq("3,2,1,2,3,1,2,1,2,1,1,3")) == mp));
    out.push_back(guarded("K' is a key", [&] {
      auto rep = classify(kp);
      return check_true("K' is a key", rep.key_pairs.contains(KeyPair{1, 2, 1}));
    }));
    out.push_back(guarded("triangular cycle", [&] {
      auto c = build_acyclic_cycle(t4, {}, kp, seq("2,3"), a);
      auto r = verify_cycle(c.quiver, c.sequence);
      return check_true("triangular cycle",
                        c.quiver == triangular_extension({t4, k, a}) &&
                            c.sequence == seq("4,3,2,1,2,3,2,3") && r.closes_equal && r.simple,
                        c.sequence.to_string());
    }));
    return out;
  };
  return it;
}

inline PaperItem item_half_finite_12() {
  Quiver q = half_finite_12();
  MutationSequence white = seq("2,4,6,8,10,12");
  MutationSequence black = seq("1,3,5,7,9,11");
  MutationSequence s = half_finite_s();
  PaperItem it{"half_finite_12", "half-finite bipartite recurrent quiver on 12 vertices", {}, {}, {}, {}};
  it.quivers = {{"Q", q}};
  it.sequences = {{"S", s}, {"S_white", white}, {"S_black", black}};
  it.expected = {{"S", "(1,3)(4,6)(7,9)(10,12)"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(check_true("12 vertices", q.size() == 12));
    out.push_back(guarded("S", [&] { return check_reddening("S", q, s, perm("(1,3)(4,6)(7,9)(10,12)")); }));
    out.push_back(guarded("recurrent white", [&] {
      return check_true("recurrent white", mutate_seq(q, white) == opposite(q));
    }));
    out.push_back(guarded("recurrent black", [&] {
      return check_true("recurrent black", mutate_seq(q, black) == opposite(q));
    }));
    return out;
  };
  return it;
}

inline PaperItem item_half_finite_15() {
  Quiver p = half_finite_15();
  Quiver q = half_finite_12();
  Quiver tri = restrict(p, {13, 14, 15});
  IntMatrix a = cross_block(p, range(1, 12), range(13, 15));
  MutationSequence s = half_finite_s();
  std::vector<std::tuple<std::string, MutationSequence, Permutation, std::size_t>> heads{
      {"M1", seq("14,15,14,13,14"), Permutation{}, 58},
      {"M2", seq("13,14,15,13"), perm("(13,15)"), 56},
      {"M3", seq("13,15,13,14,13"), perm("(13,15,14)"), 174}};
  PaperItem it{"half_finite_ext_15", "half-finite quiver feeding an oriented 3-cycle", {}, {}, {}, {}};
  it.quivers = {{"P", p}, {"Q", q}, {"triangle", tri}};
  it.sequences = {{"S", s}};
  for (auto const& [n, m, sigma, len] : heads) {
    it.sequences.emplace_back(n, m);
    it.expected.emplace_back(n, sigma.to_string() + ", cycle length " + std::to_string(len));
  }
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(check_true("15 vertices", p.size() == 15));
    out.push_back(check_true("restriction", restrict(p, range(1, 12)) == q));
    for (auto const& [n, m, sigma, len] : heads) {
      out.push_back(guarded(n, [&] { return check_reddening(n, tri, m, sigma); }));
      out.push_back(guarded(n + " cycle", [&] {
        auto c = build_cycle_general(q, s, tri, m, a);
        return check_simple_cycle(n + " cycle", c.quiver, c.sequence, len);
      }));
    }
    return out;
  };
  return it;
}

inline PaperItem item_dreaded_torus() {
  MutationSequence mgs = seq("1,3,4,2,1,3");
  Permutation sigma = perm("(1,4)(2,3)");
  PaperItem it{"dreaded_torus", "once-punctured torus and its dominated variants", {}, {}, {}, {}};
  for (Entry a = 1; a <= 4; ++a) it.quivers.emplace_back("a=" + std::to_string(a), dreaded_torus(a));
  it.sequences = {{"MGS", mgs}};
  it.expected = {{"MGS", "(1,4)(2,3) for a = 1..4"}, {"class", "1 canonical form for a = 1"}};
  it.verify = [=] {
    std::vector<Check> out;
    for (Entry a = 1; a <= 4; ++a) {
      std::string n = "MGS a=" + std::to_string(a);
      out.push_back(guarded(n, [&] { return check_green(n, dreaded_torus(a), mgs, sigma); }));
    }
    out.push_back(guarded("coframed relation", [&] {
      return check_true("coframed relation", apply_permutation(coframed(dreaded_torus(1)), sigma) ==
                                                 mutate_seq(framed(dreaded_torus(1)), mgs));
    }));
    out.push_back(guarded("single class", [&] {
      auto e = enumerate_class(dreaded_torus(1));
      return check_true("single class", e.exhausted && e.forms.size() == 1,
                        std::to_string(e.forms.size()) + " forms");
    }));
    return out;
  };
  return it;
}

inline PaperItem item_two_tori() {
  ExtensionSpec spec = two_tori_spec();
  Quiver q = triangular_extension(spec);
  MutationSequence s = seq("1,3,4,2,1,3,5,7,8,6,5,7,4,2,1,3,4,2,8,6,5,7,8,6");
  PaperItem it{"dreaded_tori_2", "two dreaded tori joined by three arrows", {}, {}, {}, {}};
  it.quivers = {{"Q", q}};
  it.sequences = {{"S", s}};
  it.expected = {{"S", "closes with equality, length 24"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(guarded("S", [&] { return check_closes("S", q, s, 24); }));
    out.push_back(guarded("general construction", [&] {
      auto c = build_cycle_general(spec.t, seq("1,3,4,2,1,3"), spec.h, seq("5,7,8,6,5,7"), spec.a);
      return check_true("general construction", c.quiver == q && c.sequence == s);
    }));
    return out;
  };
  return it;
}

inline PaperItem item_three_tori() {
  ExtensionSpec spec = three_tori_spec();
  Quiver q = triangular_extension(spec);
  MutationSequence s = paper_item("dreaded_tori_2").sequence("S");
  MutationSequence cycle = s + seq("9,11,12,10,9,11") + s + seq("12,10,9,11,12,10");
  PaperItem it{"dreaded_tori_3", "the two-tori quiver feeding a third torus", {}, {}, {}, {}};
  it.quivers = {{"Q", q}};
  it.sequences = {{"cycle", cycle}};
  it.expected = {{"cycle", "closes with equality, length 60"},
                 {"general construction", "simple, length 36"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(check_true("12 vertices", q.size() == 12));
    out.push_back(guarded("cycle", [&] { return check_closes("cycle", q, cycle, 60); }));
    out.push_back(guarded("S reddening", [&] {
      return check_reddening("S reddening", spec.t, s, Permutation{});
    }));
    out.push_back(guarded("general construction", [&] {
      auto c = build_cycle_general(spec.t, seq("1,3,4,2,1,3,5,7,8,6,5,7"), spec.h,
                                   seq("9,11,12,10,9,11"), spec.a);
      return check_simple_cycle("general construction", c.quiver, c.sequence, 36);
    }));
    return out;
  };
  return it;
}

inline PaperItem item_t5() {
  Reddened t5 = punctured_sphere(5);
  MutationSequence stated_s = seq("5,8,9,3,1,4,2,5,6,7,1,2,9,4,3,8,4,9,2,1");
  PaperItem it{"T5", "the 5-punctured sphere quiver T_5", {}, {}, {}, {}};
  it.quivers = {{"T5", t5.quiver}};
  it.sequences = {{"S", stated_s}};
  it.expected = {{"labels", "v1=1 v2=2 u1=3 u2=4 w1=5 s=6 t=7 s_bar=8 t_bar=9"},
                 {"S", "(1,8,6,3)(2,4)(7,9)"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(check_true("9 vertices", t5.quiver.size() == 9));
    out.push_back(check_true("generated sequence", t5.sequence == stated_s, t5.sequence.to_string()));
    out.push_back(guarded("S", [&] { return check_green("S", t5.quiver, stated_s, perm("(3,1,8,6)(7,9)(2,4)")); }));
    for (std::int64_t k : {4, 6}) {
      std::string n = "T" + std::to_string(k);
      out.push_back(guarded(n, [&] {
        Reddened r = punctured_sphere(k);
        return check_green(n, r.quiver, r.sequence, r.permutation);
      }));
    }
    return out;
  };
  return it;
}

inline PaperItem item_r33() {
  Quiver q = r33();
  Quiver drawn = Quiver::from_arrows(range(1, 9), {{1, 5, 1}, {2, 6, 1}, {2, 1, 1}, {3, 2, 1},
                                                   {4, 8, 1}, {4, 1, 1}, {5, 2, 1}, {5, 4, 1},
                                                   {5, 9, 1}, {6, 5, 1}, {6, 3, 1}, {7, 4, 1},
                                                   {8, 5, 1}, {8, 7, 1}, {9, 6, 1}, {9, 8, 1}});
  MutationSequence s = seq("7,4,1,8,7,5,4,2,1,9,8,7,6,5,4,3,2,1");
  PaperItem it{"R33", "triangulated 3 x 3 grid", {}, {}, {}, {}};
  it.quivers = {{"R33", q}};
  it.sequences = {{"S", s}};
  it.expected = {{"S", "(1,3)(4,6)(7,9)"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(check_true("grid generator", q == drawn));
    out.push_back(check_true("grid sequence", grid_reddening(3, 3) == s));
    out.push_back(guarded("S", [&] { return check_reddening("S", q, s, perm("(1,3)(4,6)(7,9)")); }));
    return out;
  };
  return it;
}

inline PaperItem item_r_prime() {
  Quiver q = r_prime();
  MutationSequence s = seq("5,1,7,4,1,8,7,5,4,2,1,6,5,4,3,2,1,3,5");
  PaperItem it{"Rprime", "plabic quiver R'", {}, {}, {}, {}};
  it.quivers = {{"Rprime", q}};
  it.sequences = {{"Sprime", s}};
  it.expected = {{"Sprime", "(1,3)(4,6)(7,8)"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(guarded("Sprime", [&] { return check_reddening("Sprime", q, s, perm("(1,3)(4,6)(7,8)")); }));
    out.push_back(guarded("subquiver of R33", [&] {
      auto iso = find_isomorphism(mutate_seq(q, seq("5,1")), restrict(r33(), range(1, 8)));
      return check_true("subquiver of R33", iso.has_value(), perm_or_none(iso));
    }));
    return out;
  };
  return it;
}

inline PaperItem item_r_double_prime() {
  Quiver q = r_double_prime();
  MutationSequence s = seq("7,4,1,8,7,5,4,1,9,8,7,2,5,4,3,1,7,8,5,3,1,7");
  PaperItem it{"Rdoubleprime", "plabic quiver R'' (no vertex 6)", {}, {}, {}, {}};
  it.quivers = {{"Rdoubleprime", q}};
  it.sequences = {{"Sdoubleprime", s}};
  it.expected = {{"Sdoubleprime", "(2,5)(3,8)(4,9,7)"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(check_true("8 vertices, no 6", q.size() == 8 && !q.contains(6)));
    out.push_back(guarded("Sdoubleprime", [&] {
      return check_reddening("Sdoubleprime", q, s, perm("(2,5)(3,8)(4,9,7)"));
    }));
    out.push_back(guarded("subquiver of R33", [&] {
      std::vector<Label> keep{1, 2, 3, 4, 5, 6, 8, 9};
      bool ok = canonical_form(mutate_seq(q, seq("7,4"))) == canonical_form(restrict(r33(), keep));
      return check_true("subquiver of R33", ok);
    }));
    return out;
  };
  return it;
}

inline PaperItem item_t5_r33() {
  ExtensionSpec spec = t5_r33_spec();
  Quiver q = triangular_extension(spec);
  MutationSequence s_r = grid_reddening(3, 3);
  MutationSequence s_t = punctured_sphere(5, 9).sequence;
  PaperItem it{"t5_r33_extension", "R_{3,3} feeding T_5 (relabeled 10..18)", {}, {}, {}, {}};
  it.quivers = {{"Q", q}};
  it.sequences = {{"S_R33", s_r}, {"S_T5", s_t}};
  it.expected = {{"cycle", "simple, length 152"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(check_true("18 vertices", q.size() == 18));
    out.push_back(guarded("cycle", [&] {
      auto c = build_cycle_general(spec.t, s_r, spec.h, s_t, spec.a);
      return check_simple_cycle("cycle", c.quiver, c.sequence, 152);
    }));
    return out;
  };
  return it;
}

inline PaperItem item_banff_q() {
  Quiver q = banff_q();
  MutationSequence m = banff_m();
  MutationSequence s = banff_s();
  MutationSequence n = banff_n();
  PaperItem it{"banff_Q", "a Banff quiver on 6 vertices", {}, {}, {}, {}};
  it.quivers = {{"Q", q}};
  it.sequences = {{"M", m}, {"S", s}, {"N", n}};
  it.expected = {{"N", "(), length 34"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(guarded("4 is a source", [&] {
      auto [src, snk] = sources_and_sinks(mutate_seq(q, m));
      return check_true("4 is a source", src.contains(4));
    }));
    out.push_back(guarded("S", [&] {
      auto got = is_reddening(mutate_seq(q, m), s);
      return check_true("S", got.has_value(), perm_or_none(got));
    }));
    out.push_back(guarded("N", [&] { return check_reddening("N", q, n, Permutation{}); }));
    out.push_back(check_true("N length", n.size() == 34, std::to_string(n.size())));
    return out;
  };
  return it;
}

inline PaperItem item_banff_ext() {
  ExtensionSpec spec = banff_extension_spec();
  Quiver q = triangular_extension(spec);
  MutationSequence s = seq("7,4,1,8,7,5,4,1,9,8,7,2,5,4,3,1,7,8,5,3,1,7");
  Permutation shift;
  {
    std::map<Label, Label> up;
    for (Label x = 1; x <= 6; ++x) up[x] = x + 9;
    for (Label x = 10; x <= 15; ++x) up[x] = x - 9;
    shift = Permutation::from_map(up);
  }
  MutationSequence n = banff_n().relabeled(shift);
  PaperItem it{"banff_extension_14", "R'' feeding the Banff quiver (relabeled 10..15)", {}, {}, {}, {}};
  it.quivers = {{"Q", q}};
  it.sequences = {{"Sdoubleprime", s}, {"N", n}};
  it.expected = {{"cycle", "simple, length 336"}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(check_true("14 vertices, no 6", q.size() == 14 && !q.contains(6)));
    std::size_t cross = 0;
    for (auto const& ar : q.arrows())
      if (ar.from <= 9 && ar.to >= 10) ++cross;
    out.push_back(check_true("six cross arrows", cross == 6, std::to_string(cross)));
    out.push_back(guarded("cycle", [&] {
      auto c = build_cycle_general(spec.t, s, spec.h, n, spec.a);
      return check_simple_cycle("cycle", c.quiver, c.sequence, 336);
    }));
    return out;
  };
  return it;
}

inline PaperItem item_fork() {
  Quiver q = fork_example();
  PaperItem it{"fork", "a fork", {}, {}, {}, {}};
  it.quivers = {{"Q", q}};
  it.expected = {{"point of return", "1"}};
  it.verify = [=] {
    auto rep = classify(q);
    return std::vector<Check>{check_true("fork at 1", rep.fork_returns == std::set<Label>{1})};
  };
  return it;
}

inline PaperItem item_key() {
  Quiver q = key_example();
  PaperItem it{"key", "a key with twin pair {1,3}", {}, {}, {}, {}};
  it.quivers = {{"Q", q}};
  it.expected = {{"key pair", "{1,3}, b = 0"}, {"forkless keys", "3"}};
  it.verify = [=] {
    std::vector<Check> out;
    auto rep = classify(q);
    out.push_back(check_true("key pair", rep.key_pairs == std::set<KeyPair>{{1, 3, 0}}));
    out.push_back(guarded("key census", [&] {
      auto res = forkless_explore(q);
      std::set<std::pair<std::set<Label>, std::set<Label>>> ends;
      for (auto i : res.keys) ends.insert(sources_and_sinks(res.nodes[i]));
      return check_true("key census",
                        res.exhausted && res.keys.size() == 3 && ends.size() == 3,
                        std::to_string(res.keys.size()) + " keys");
    }));
    return out;
  };
  return it;
}

inline PaperItem item_prefork() {
  Quiver q = prefork_example();
  PaperItem it{"prefork", "a pre-fork with twin pair {1,3}", {}, {}, {}, {}};
  it.quivers = {{"Q", q}};
  it.expected = {{"pre-fork pair", "{1,3}, r = 2"}};
  it.verify = [=] {
    auto rep = classify(q);
    return std::vector<Check>{
        check_true("pre-fork pair", rep.prefork_pairs == std::set<PreforkPair>{{1, 3, 2}})};
  };
  return it;
}

inline PaperItem item_box() {
  Quiver q = box_quiver(2, 2);
  PaperItem it{"box_quiver", "the box quiver with a = b = 2", {}, {}, {}, {}};
  it.quivers = {{"Q", q}};
  it.expected = {{"reddening", "none up to length 10"}};
  it.verify = [=] {
    std::vector<Check> out;
    SearchOptions opt;
    opt.max_len = 10;
    auto res = search_reddening(q, opt);
    out.push_back(check_true("no reddening sequence", res.hits.empty(),
                             std::to_string(res.hits.size()) + " hits"));
    auto fx = forkless_explore(q);
    out.push_back(check_true("finite, no key", fx.exhausted && fx.keys.empty(),
                             std::to_string(fx.nodes.size()) + " nodes"));
    return out;
  };
  return it;
}

inline PaperItem item_infinite_key() {
  Quiver q = infinite_reduced_key();
  MutationSequence a = seq("2,4,3,1");
  MutationSequence n = seq("4,1,3,1,3,4,2,4,3,1");
  PaperItem it{"infinite_reduced_key", "key with infinitely many reduced reddening sequences", {}, {}, {}, {}};
  it.quivers = {{"Q", q}};
  it.sequences = {{"short", a}, {"N", n}};
  it.verify = [=] {
    std::vector<Check> out;
    out.push_back(check_true("key pair {1,3}", classify(q).key_pairs.contains(KeyPair{1, 3, 0})));
    for (auto const& [name, s] : {std::pair{"short", a}, std::pair{"N", n}}) {
      out.push_back(guarded(name, [&] {
        auto got = is_reddening(q, s);
        return check_true(name, got.has_value() && s.is_reduced(), perm_or_none(got));
      }));
    }
    return out;
  };
  return it;
}

inline PaperItem item_fordy_marsh() {
  PaperItem it{"fordy_marsh", "Chebyshev-weighted 4-vertex cycles, a,b,c in {2,3}, k = 1..5", {}, {}, {}, {}};
  auto fm = fordy_marsh(2, 2, 2, 1);
  it.quivers = {{"a=b=c=2,k=1", fm.quiver}};
  it.sequences = {{"cycle k=1", fm.cycle}};
  it.expected = {{"cycle", "closes with equality, simple, length 2k+2"}};
  it.verify = [] {
    std::vector<Check> out;
    for (Entry a : {2, 3})
      for (Entry b : {2, 3})
        for (Entry c : {2, 3})
          for (std::int64_t k = 1; k <= 5; ++k) {
            std::string n = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                            " c=" + std::to_string(c) + " k=" + std::to_string(k);
            out.push_back(guarded(n, [&] {
              auto f = fordy_marsh(a, b, c, k);
              auto r = verify_cycle(f.quiver, f.cycle);
              bool four = true;
              for (auto const& x : trajectory(f.quiver, f.cycle)) four = four && has_oriented_four_cycle(x);
              bool ok = r.closes_equal && r.simple && r.length == static_cast<std::size_t>(2 * k + 2) &&
                        four && r.all_abundant;
              return check_true(n, ok, f.cycle.to_string());
            }));
          }
    return out;
  };
  return it;
}

inline PaperItem item_grid() {
  PaperItem it{"grid_family", "triangulated grids R_{k,l}, 1 <= k, l <= 4", {}, {}, {}, {}};
  it.quivers = {{"R22", grid_quiver(2, 2)}};
  it.sequences = {{"R22", grid_reddening(2, 2)}};
  it.expected = {{"length", "k * l * (l + 1) / 2"}};
  it.verify = [] {
    std::vector<Check> out;
    for (std::int64_t k = 1; k <= 4; ++k)
      for (std::int64_t l = 1; l <= 4; ++l) {
        std::string n = "R" + std::to_string(k) + "," + std::to_string(l);
        out.push_back(guarded(n, [&] {
          auto s = grid_reddening(k, l);
          auto got = is_reddening(grid_quiver(k, l), s);
          bool ok = got.has_value() && s.size() == static_cast<std::size_t>(k * l * (l + 1) / 2);
          return check_true(n, ok, perm_or_none(got));
        }));
      }
    return out;
  };
  return it;
}

inline std::vector<std::pair<std::string, Builder>> const& registry() {
  static const std::vector<std::pair<std::string, Builder>> items{
      {"R33", item_r33},
      {"Rdoubleprime", item_r_double_prime},
      {"Rprime", item_r_prime},
      {"T5", item_t5},
      {"banff_Q", item_banff_q},
      {"banff_extension_14", item_banff_ext},
      {"box_quiver", item_box},
      {"dreaded_tori_2", item_two_tori},
      {"dreaded_tori_3", item_three_tori},
      {"dreaded_torus", item_dreaded_torus},
      {"fig1_extension", item_fig1},
      {"fordy_marsh", item_fordy_marsh},
      {"fork", item_fork},
      {"grid_family", item_grid},
      {"half_finite_12", item_half_finite_12},
      {"half_finite_ext_15", item_half_finite_15},
      {"infinite_reduced_key", item_infinite_key},
      {"key", item_key},
      {"key_K_and_Kprime", item_key_k},
      {"non_equal_pair", item_non_equal},
      {"prefork", item_prefork},
      {"t5_r33_extension", item_t5_r33},
  };
  return items;
}

}  // namespace detail

/// Registered names in sorted order.
inline std::vector<std::string> item_names() {
  std::vector<std::string> out;
  for (auto const& [n, b] : detail::registry()) out.push_back(n);
  return out;
}

inline PaperItem paper_item(std::string_view name) {
  for (auto const& [n, b] : detail::registry())
    if (n == name) return b();
  throw Error(ErrorKind::unknown_name, "no catalog item named " + std::string(name));
}

}  // namespace redcycle::catalog
