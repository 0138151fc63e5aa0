#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "redcycle/permutation.hpp"
#include "redcycle/quiver.hpp"

namespace redcycle {

namespace detail {

// Label-independent vertex colors by iterated refinement. Several quivers
// are refined together so that colors are comparable between them. The
// initial color is (frozen flag, sorted row entries); each round appends the
// sorted multiset of (entry, neighbour color) pairs. Colors are renamed by
// sorting signatures, so they depend only on the isomorphism type.
inline std::vector<std::vector<std::size_t>> refine_colors(
    std::vector<Quiver const*> const& quivers) {
  using Signature = std::vector<Entry>;
  std::vector<std::vector<Signature>> sigs(quivers.size());
  for (std::size_t g = 0; g < quivers.size(); ++g) {
    Quiver const& q = *quivers[g];
    sigs[g].resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      Signature s;
      s.push_back(q.is_frozen_index(i) ? 1 : 0);
      std::vector<Entry> row;
      for (std::size_t j = 0; j < q.size(); ++j)
        if (j != i) row.push_back(q.at(i, j));
      std::sort(row.begin(), row.end());
      s.insert(s.end(), row.begin(), row.end());
      sigs[g][i] = std::move(s);
    }
  }

  std::vector<std::vector<std::size_t>> colors(quivers.size());
  std::size_t num_colors = 0;
  while (true) {
    std::map<Signature, std::size_t> names;
    for (auto const& gs : sigs)
      for (auto const& s : gs) names.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : names) id = next++;
    for (std::size_t g = 0; g < quivers.size(); ++g) {
      colors[g].resize(sigs[g].size());
      for (std::size_t i = 0; i < sigs[g].size(); ++i) colors[g][i] = names[sigs[g][i]];
    }
    if (names.size() == num_colors) break;
    num_colors = names.size();
    for (std::size_t g = 0; g < quivers.size(); ++g) {
      Quiver const& q = *quivers[g];
      for (std::size_t i = 0; i < q.size(); ++i) {
        std::vector<std::pair<Entry, Entry>> nb;
        for (std::size_t j = 0; j < q.size(); ++j)
          if (j != i) nb.emplace_back(q.at(i, j), static_cast<Entry>(colors[g][j]));
        std::sort(nb.begin(), nb.end());
        Signature s{static_cast<Entry>(colors[g][i])};
        for (auto [e, c] : nb) {
          s.push_back(e);
          s.push_back(c);
        }
        sigs[g][i] = std::move(s);
      }
    }
  }
  return colors;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(Quiver const& a, Quiver const& b) : a_(a), b_(b) {
    auto colors = refine_colors({&a, &b});
    color_a_ = std::move(colors[0]);
    color_b_ = std::move(colors[1]);
    n_ = a.size();
    image_.assign(n_, kUnset);
    used_.assign(n_, 0);
    // Frozen vertices are fixed points.
    for (std::size_t i = 0; i < n_; ++i) {
      if (a.is_frozen_index(i)) {
        image_[i] = i;
        used_[i] = 1;
      } else {
        order_.push_back(i);
      }
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    for (std::size_t i = 0; i < n_; ++i) {
      if (image_[i] != kUnset && !consistent(i, image_[i])) return std::nullopt;
    }
    if (search(0)) return image_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool consistent(std::size_t u, std::size_t v) const {
    for (std::size_t w = 0; w < n_; ++w) {
      if (image_[w] == kUnset) continue;
      std::size_t x = (w == u) ? v : image_[w];
      if (a_.at(u, w) != b_.at(v, x)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    std::size_t u = order_[depth];
    // Candidates in ascending label order (labels are sorted by index).
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v] || b_.is_frozen_index(v) || color_a_[u] != color_b_[v]) continue;
      if (!consistent(u, v)) continue;
      image_[u] = v;
      used_[v] = 1;
      if (search(depth + 1)) return true;
      image_[u] = kUnset;
      used_[v] = 0;
    }
    return false;
  }

  Quiver const& a_;
  Quiver const& b_;
  std::size_t n_ = 0;
  std::vector<std::size_t> color_a_, color_b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<char> used_;
};

}  // namespace detail

/// Some sigma with apply_permutation(a, sigma) == b, or nothing. Both
/// quivers must live on the same labels; frozen vertices are held fixed.
inline std::optional<Permutation> find_isomorphism(Quiver const& a, Quiver const& b) {
  if (a.labels() != b.labels() || a.frames() != b.frames()) return std::nullopt;
  if (a == b) return Permutation{};
  auto image = detail::IsomorphismSearch(a, b).run();
  if (!image) return std::nullopt;
  std::map<Label, Label> mapping;
  for (std::size_t i = 0; i < a.size(); ++i) mapping[a.labels()[i]] = b.labels()[(*image)[i]];
  Permutation sigma = Permutation::from_map(mapping);
  if (!(apply_permutation(a, sigma) == b)) {
    throw Error(ErrorKind::internal_contradiction, "isomorphism failed round-trip check");
  }
  return sigma;
}

namespace detail {

// Lexicographically least adjacency code over orderings that list the
// refined color classes in canonical order. Position p contributes the
// entries between its vertex and positions 0..p-1, so partial codes can be
// compared during the search.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(Quiver const& q) : q_(q), n_(q.size()) {
    colors_ = refine_colors({&q})[0];
    std::vector<std::size_t> sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    slot_color_ = sorted;
    placed_.assign(n_, 0);
  }

  std::vector<Entry> run() {
    current_.clear();
    order_.clear();
    have_best_ = false;
    search(0);
    return best_;
  }

 private:
  // Swapping two twins is an automorphism, so only one of them needs to be
  // tried at any depth.
  bool twins(std::size_t u, std::size_t v) const {
    if (q_.at(u, v) != 0) return false;
    for (std::size_t w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (q_.at(u, w) != q_.at(v, w)) return false;
    }
    return true;
  }

  // Prefix strictly above the best code's prefix of the same length.
  bool worse_than_best() const {
    if (!have_best_) return false;
    return std::lexicographical_compare(best_.begin(), best_.begin() + current_.size(),
                                        current_.begin(), current_.end());
  }

  void search(std::size_t depth) {
    if (depth == n_) {
      if (!have_best_ || current_ < best_) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (placed_[v] || colors_[v] != slot_color_[depth]) continue;
      bool redundant = false;
      for (std::size_t u : tried) {
        if (twins(u, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(v);

      std::size_t mark = current_.size();
      current_.push_back(q_.is_frozen_index(v) ? 1 : 0);
      for (std::size_t p = 0; p < depth; ++p) current_.push_back(q_.at(v, order_[p]));
      if (!worse_than_best()) {
        placed_[v] = 1;
        order_.push_back(v);
        search(depth + 1);
        order_.pop_back();
        placed_[v] = 0;
      }
      current_.resize(mark);
    }
  }

  Quiver const& q_;
  std::size_t n_;
  std::vector<std::size_t> colors_;
  std::vector<std::size_t> slot_color_;
  std::vector<char> placed_;
  std::vector<std::size_t> order_;
  std::vector<Entry> current_;
  std::vector<Entry> best_;
  bool have_best_ = false;
};

}  // namespace detail

/// Byte string that is equal for two quivers exactly when they are
/// isomorphic (labels ignored).
inline std::string canonical_form(Quiver const& q) {
  std::vector<Entry> code = detail::CanonicalSearch(q).run();
  std::string out;
  auto put = [&out](std::uint64_t x) {
    for (int k = 0; k < 8; ++k) out.push_back(static_cast<char>((x >> (8 * k)) & 0xff));
  };
  put(q.size());
  for (Entry e : code) put(static_cast<std::uint64_t>(e));
  return out;
}

}  // namespace redcycle
