#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "redcycle/error.hpp"
#include "redcycle/int_matrix.hpp"
#include "redcycle/permutation.hpp"
#include "redcycle/sequence.hpp"

namespace redcycle {

/// `count` arrows from `from` to `to`.
struct Arrow {
  Label from;
  Label to;
  Entry count = 1;

  friend bool operator==(Arrow const&, Arrow const&) = default;
  friend auto operator<=>(Arrow const&, Arrow const&) = default;
};

/// A frozen vertex and the mutable vertex it is paired with (i and i').
struct FramePair {
  Label mutable_label;
  Label frozen_label;

  friend bool operator==(FramePair const&, FramePair const&) = default;
  friend auto operator<=>(FramePair const&, FramePair const&) = default;
};

/// A labeled quiver stored as its skew-symmetric exchange matrix.
///
/// Labels are kept in ascending order and index the matrix. Frozen vertices
/// are optional; when present each is paired with a mutable vertex. Arrows
/// between two frozen vertices are never stored. Values are immutable once
/// built: every operation returns a new quiver.
class Quiver {
 public:
  Quiver() = default;

  /// Unframed quiver on `labels` with the given arrows. Listing both
  /// orientations between the same pair is rejected (no 2-cycles).
  static Quiver from_arrows(std::vector<Label> labels, std::vector<Arrow> const& arrows) {
    return from_arrows(std::move(labels), {}, arrows);
  }

  static Quiver from_arrows(std::vector<Label> mutable_labels,
                            std::vector<FramePair> frames,
                            std::vector<Arrow> const& arrows) {
    Quiver q(std::move(mutable_labels), std::move(frames));
    std::set<std::pair<Label, Label>> seen;
    for (auto const& a : arrows) {
      if (a.count < 0) {
        throw Error(ErrorKind::invalid_quiver, "negative arrow multiplicity");
      }
      if (a.count == 0) continue;
      if (a.from == a.to) throw Error(ErrorKind::invalid_quiver, "loop at " + std::to_string(a.from));
      if (seen.contains({a.to, a.from})) {
        throw Error(ErrorKind::invalid_quiver, "oriented 2-cycle between " +
                                                   std::to_string(a.from) + " and " +
                                                   std::to_string(a.to));
      }
      seen.insert({a.from, a.to});
      std::size_t i = q.index_of(a.from);
      std::size_t j = q.index_of(a.to);
      q.at(i, j) = checked_add(q.at(i, j), a.count);
      q.at(j, i) = checked_sub(q.at(j, i), a.count);
    }
    q.validate();
    return q;
  }

  /// Unframed quiver from an exchange matrix whose rows follow `labels`.
  static Quiver from_matrix(std::vector<Label> const& labels, IntMatrix const& b) {
    return from_matrix(labels, {}, b);
  }

  /// `labels` lists every vertex (mutable and frozen) in the row order of `b`.
  static Quiver from_matrix(std::vector<Label> const& labels,
                            std::vector<FramePair> frames, IntMatrix const& b) {
    if (b.rows() != labels.size() || b.cols() != labels.size()) {
      throw Error(ErrorKind::invalid_quiver, "matrix size does not match label count");
    }
    std::set<Label> frozen;
    for (auto const& f : frames) frozen.insert(f.frozen_label);
    std::vector<Label> mut;
    for (Label l : labels) {
      if (!frozen.contains(l)) mut.push_back(l);
    }
    Quiver q(std::move(mut), std::move(frames));
    if (q.size() != labels.size()) {
      throw Error(ErrorKind::invalid_quiver, "frozen label missing from label list");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = 0; j < labels.size(); ++j) {
        q.at(q.index_of(labels[i]), q.index_of(labels[j])) = b(i, j);
      }
    }
    q.validate();
    return q;
  }

  /// Number of vertices including frozen ones.
  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  /// Number of mutable vertices.
  [[nodiscard]] std::size_t rank() const noexcept { return labels_.size() - frames_.size(); }
  [[nodiscard]] bool has_frozen() const noexcept { return !frames_.empty(); }

  [[nodiscard]] std::vector<Label> const& labels() const noexcept { return labels_; }
  [[nodiscard]] std::vector<FramePair> const& frames() const noexcept { return frames_; }

  [[nodiscard]] std::vector<Label> mutable_labels() const {
    std::vector<Label> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (!frozen_[i]) out.push_back(labels_[i]);
    return out;
  }

  [[nodiscard]] std::vector<Label> frozen_labels() const {
    std::vector<Label> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (frozen_[i]) out.push_back(labels_[i]);
    return out;
  }

  [[nodiscard]] bool contains(Label v) const {
    return std::binary_search(labels_.begin(), labels_.end(), v);
  }

  [[nodiscard]] bool is_frozen_index(std::size_t i) const { return frozen_[i] != 0; }
  [[nodiscard]] bool is_frozen(Label v) const { return frozen_[index_of(v)] != 0; }

  [[nodiscard]] std::optional<Label> frozen_partner(Label v) const {
    for (auto const& f : frames_)
      if (f.mutable_label == v) return f.frozen_label;
    return std::nullopt;
  }

  [[nodiscard]] std::size_t index_of(Label v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v) {
      throw Error(ErrorKind::unknown_vertex, "no vertex labeled " + std::to_string(v));
    }
    return static_cast<std::size_t>(it - labels_.begin());
  }

  /// Arrows i -> j minus arrows j -> i.
  [[nodiscard]] Entry b(Label i, Label j) const { return at(index_of(i), index_of(j)); }
  [[nodiscard]] Entry at(std::size_t i, std::size_t j) const { return b_[i * labels_.size() + j]; }

  [[nodiscard]] std::vector<Entry> const& matrix_data() const noexcept { return b_; }

  [[nodiscard]] IntMatrix matrix() const {
    IntMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) m(i, j) = at(i, j);
    return m;
  }

  /// Arrows with positive multiplicity, sorted by (from, to).
  [[nodiscard]] std::vector<Arrow> arrows() const {
    std::vector<Arrow> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (at(i, j) > 0) out.push_back({labels_[i], labels_[j], at(i, j)});
    return out;
  }

  [[nodiscard]] Entry max_abs_entry() const noexcept {
    Entry m = 0;
    for (Entry e : b_) m = std::max(m, e < 0 ? -e : e);
    return m;
  }

  /// Mutation at the vertex stored at index `k` (matrix rule).
  [[nodiscard]] Quiver mutated_at_index(std::size_t k) const {
    if (frozen_[k]) {
      throw Error(ErrorKind::frozen_vertex,
                  "cannot mutate at frozen vertex " + std::to_string(labels_[k]));
    }
    Quiver out = *this;
    std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      Entry bik = at(i, k);
      if (bik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k || j == i) continue;
        Entry bkj = at(k, j);
        if (bik > 0 && bkj > 0) {
          out.at(i, j) = checked_add(out.at(i, j), checked_mul(bik, bkj));
        } else if (bik < 0 && bkj < 0) {
          out.at(i, j) = checked_sub(out.at(i, j), checked_mul(bik, bkj));
        }
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      out.at(k, j) = -at(k, j);
      out.at(j, k) = -at(j, k);
    }
    if (has_frozen()) {
      for (std::size_t i = 0; i < n; ++i)
        if (frozen_[i])
          for (std::size_t j = 0; j < n; ++j)
            if (frozen_[j]) out.at(i, j) = 0;
    }
    return out;
  }

  friend bool operator==(Quiver const&, Quiver const&) = default;

  /// Checks skew-symmetry, zero diagonal and the empty frozen block.
  void validate() const {
    std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      if (at(i, i) != 0) throw Error(ErrorKind::invalid_quiver, "nonzero diagonal");
      for (std::size_t j = i + 1; j < n; ++j) {
        if (at(i, j) != -at(j, i)) {
          throw Error(ErrorKind::invalid_quiver, "matrix is not skew-symmetric");
        }
        if (frozen_[i] && frozen_[j] && at(i, j) != 0) {
          throw Error(ErrorKind::invalid_quiver, "arrow between frozen vertices");
        }
      }
    }
  }

 private:
  friend Quiver restrict(Quiver const&, std::vector<Label> const&);
  friend Quiver apply_permutation(Quiver const&, Permutation const&);
  friend Quiver opposite(Quiver const&);
  friend Quiver disjoint_union(Quiver const&, Quiver const&);
  friend Quiver with_arrows(Quiver const&, std::vector<Arrow> const&);

  Quiver(std::vector<Label> mutable_labels, std::vector<FramePair> frames)
      : frames_(std::move(frames)) {
    std::sort(frames_.begin(), frames_.end());
    labels_ = std::move(mutable_labels);
    for (auto const& f : frames_) labels_.push_back(f.frozen_label);
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
      throw Error(ErrorKind::label_collision, "duplicate vertex label");
    }
    for (Label l : labels_) {
      if (l <= 0) throw Error(ErrorKind::invalid_quiver, "labels must be positive");
    }
    frozen_.assign(labels_.size(), 0);
    std::set<Label> partners;
    for (auto const& f : frames_) {
      frozen_[index_of(f.frozen_label)] = 1;
    }
    for (auto const& f : frames_) {
      if (!contains(f.mutable_label) || frozen_[index_of(f.mutable_label)]) {
        throw Error(ErrorKind::invalid_quiver, "frozen vertex paired with a non-mutable label");
      }
      if (!partners.insert(f.mutable_label).second) {
        throw Error(ErrorKind::invalid_quiver, "mutable vertex paired twice");
      }
    }
    b_.assign(labels_.size() * labels_.size(), 0);
  }

  Entry& at(std::size_t i, std::size_t j) { return b_[i * labels_.size() + j]; }

  std::vector<Label> labels_;
  std::vector<char> frozen_;
  std::vector<FramePair> frames_;
  std::vector<Entry> b_;
};

inline Quiver mutate(Quiver const& q, Label v) {
  return q.mutated_at_index(q.index_of(v));
}

/// Left-to-right fold of `mutate`; when `trajectory` is given it receives
/// all |s|+1 intermediate quivers, starting with `q`.
inline Quiver mutate_seq(Quiver const& q, MutationSequence const& s,
                         std::vector<Quiver>* trajectory = nullptr) {
  Quiver cur = q;
  if (trajectory != nullptr) {
    trajectory->clear();
    trajectory->reserve(s.size() + 1);
    trajectory->push_back(cur);
  }
  for (Label v : s) {
    cur = mutate(cur, v);
    if (trajectory != nullptr) trajectory->push_back(cur);
  }
  return cur;
}

inline std::vector<Quiver> trajectory(Quiver const& q, MutationSequence const& s) {
  std::vector<Quiver> out;
  mutate_seq(q, s, &out);
  return out;
}

/// Full subquiver on `keep`. Frames survive only when both ends are kept.
inline Quiver restrict(Quiver const& q, std::vector<Label> const& keep) {
  std::set<Label> kept(keep.begin(), keep.end());
  for (Label v : kept) (void)q.index_of(v);
  std::vector<FramePair> frames;
  std::set<Label> orphan_frozen;
  for (auto const& f : q.frames()) {
    if (kept.contains(f.frozen_label)) {
      if (kept.contains(f.mutable_label)) {
        frames.push_back(f);
      } else {
        orphan_frozen.insert(f.frozen_label);
      }
    }
  }
  if (!orphan_frozen.empty()) {
    throw Error(ErrorKind::invalid_quiver,
                "restriction keeps a frozen vertex without its mutable partner");
  }
  std::vector<Label> mut;
  for (Label v : kept)
    if (!q.is_frozen(v)) mut.push_back(v);
  Quiver out(std::move(mut), std::move(frames));
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t qi = q.index_of(out.labels()[i]);
    for (std::size_t j = 0; j < out.size(); ++j) {
      out.at(i, j) = q.at(qi, q.index_of(out.labels()[j]));
    }
  }
  return out;
}

/// Labeled equality: same vertices, same frames, same arrows.
inline bool equals(Quiver const& a, Quiver const& b) { return a == b; }

/// Relabels mutable vertices: b'[sigma(i)][sigma(j)] = b[i][j]. Frozen
/// vertices stay put.
inline Quiver apply_permutation(Quiver const& q, Permutation const& sigma) {
  for (auto [from, to] : sigma.moved()) {
    if (!q.contains(from) || !q.contains(to)) {
      throw Error(ErrorKind::unknown_vertex,
                  "permutation moves a label outside the quiver: " + std::to_string(from));
    }
    if (q.is_frozen(from) || q.is_frozen(to)) {
      throw Error(ErrorKind::frozen_vertex, "permutation moves a frozen vertex");
    }
  }
  Quiver out = q;
  std::vector<std::size_t> image(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) image[i] = q.index_of(sigma(q.labels()[i]));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out.at(image[i], image[j]) = q.at(i, j);
  return out;
}

/// All arrows reversed.
inline Quiver opposite(Quiver const& q) {
  Quiver out = q;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out.at(i, j) = -q.at(i, j);
  return out;
}

/// Disjoint union of two quivers on disjoint label sets.
inline Quiver disjoint_union(Quiver const& a, Quiver const& b) {
  std::vector<Label> mut = a.mutable_labels();
  for (Label v : b.mutable_labels()) mut.push_back(v);
  std::vector<FramePair> frames = a.frames();
  frames.insert(frames.end(), b.frames().begin(), b.frames().end());
  for (Label v : b.labels()) {
    if (a.contains(v)) {
      throw Error(ErrorKind::label_collision, "label " + std::to_string(v) + " used twice");
    }
  }
  Quiver out(std::move(mut), std::move(frames));
  for (Quiver const* part : {&a, &b}) {
    for (std::size_t i = 0; i < part->size(); ++i) {
      std::size_t oi = out.index_of(part->labels()[i]);
      for (std::size_t j = 0; j < part->size(); ++j) {
        out.at(oi, out.index_of(part->labels()[j])) = part->at(i, j);
      }
    }
  }
  return out;
}

/// Adds `count` arrows from -> to (count may be negative to reverse).
inline Quiver with_arrows(Quiver const& q, std::vector<Arrow> const& arrows) {
  Quiver out = q;
  for (auto const& a : arrows) {
    std::size_t i = out.index_of(a.from);
    std::size_t j = out.index_of(a.to);
    out.at(i, j) = checked_add(out.at(i, j), a.count);
    out.at(j, i) = checked_sub(out.at(j, i), a.count);
  }
  out.validate();
  return out;
}

/// Mutable part only: frozen vertices and their arrows dropped.
inline Quiver mutable_part(Quiver const& q) {
  if (!q.has_frozen()) return q;
  return restrict(q, q.mutable_labels());
}

/// |b_ij| >= 2 for every pair of distinct mutable vertices.
inline bool is_abundant(Quiver const& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.is_frozen_index(i)) continue;
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (q.is_frozen_index(j)) continue;
      Entry e = q.at(i, j);
      if (e < 2 && e > -2) return false;
    }
  }
  return true;
}

/// No oriented cycle among the mutable vertices.
inline bool is_acyclic(Quiver const& q) {
  std::size_t n = q.size();
  std::vector<int> indeg(n, 0);
  std::vector<char> active(n, 0);
  for (std::size_t i = 0; i < n; ++i) active[i] = !q.is_frozen_index(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (active[i] && active[j] && q.at(i, j) > 0) ++indeg[j];
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (active[i] && indeg[i] == 0) ready.push_back(i);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t i = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t j = 0; j < n; ++j) {
      if (active[j] && q.at(i, j) > 0 && --indeg[j] == 0) ready.push_back(j);
    }
  }
  return removed == q.rank();
}

}  // namespace redcycle
