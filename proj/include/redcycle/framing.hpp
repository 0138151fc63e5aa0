#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "redcycle/error.hpp"
#include "redcycle/int_matrix.hpp"
#include "redcycle/quiver.hpp"
#include "redcycle/sequence.hpp"

namespace redcycle {

/// Offset added to a mutable label to get its frozen partner: the smallest
/// power of ten not below the largest label, times ten. Always larger than
/// every mutable label.
inline Label frame_offset(Quiver const& q) {
  Label max_label = 1;
  for (Label v : q.labels()) max_label = std::max(max_label, v);
  Label p = 1;
  while (p < max_label) p = checked_mul(p, 10);
  return checked_mul(p, 10);
}

namespace detail {

inline Quiver attach_frame(Quiver const& q, Entry sign) {
  if (q.has_frozen()) throw Error(ErrorKind::already_framed, "quiver already has frozen vertices");
  Label offset = frame_offset(q);
  std::vector<Label> labels = q.labels();
  std::vector<FramePair> frames;
  std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    frames.push_back({labels[i], labels[i] + offset});
    labels.push_back(labels[i] + offset);
  }
  IntMatrix b(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b(i, j) = q.at(i, j);
    b(i, n + i) = sign;
    b(n + i, i) = -sign;
  }
  return Quiver::from_matrix(labels, std::move(frames), b);
}

}  // namespace detail

/// Adds a frozen i' and one arrow i -> i' for every vertex i.
inline Quiver framed(Quiver const& q) { return detail::attach_frame(q, 1); }

/// Adds a frozen i' and one arrow i' -> i for every vertex i.
inline Quiver coframed(Quiver const& q) { return detail::attach_frame(q, -1); }

/// Arrows from mutable i to frozen j' of a framed state; rows and columns
/// follow the ascending mutable labels.
struct CMatrix {
  std::vector<Label> labels;
  IntMatrix values;

  [[nodiscard]] Entry at(Label i, Label j) const {
    return values(position(i), position(j));
  }

  [[nodiscard]] std::size_t position(Label v) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == v) return k;
    throw Error(ErrorKind::unknown_vertex, "no row for label " + std::to_string(v));
  }

  friend bool operator==(CMatrix const&, CMatrix const&) = default;
};

enum class Color { green, red };

namespace detail {

inline Color row_color(IntMatrix const& values, std::size_t row, Label label) {
  bool pos = false;
  bool neg = false;
  for (std::size_t j = 0; j < values.cols(); ++j) {
    pos = pos || values(row, j) > 0;
    neg = neg || values(row, j) < 0;
  }
  if (pos && neg) {
    throw Error(ErrorKind::sign_coherence_violation,
                "row of vertex " + std::to_string(label) + " has mixed signs");
  }
  if (!pos && !neg) {
    throw Error(ErrorKind::zero_row, "row of vertex " + std::to_string(label) + " is zero");
  }
  return pos ? Color::green : Color::red;
}

}  // namespace detail

/// Reads the C-matrix of a framed state. Every row is checked for sign
/// coherence; a violation is an internal error.
inline CMatrix c_matrix_of(Quiver const& framed_state) {
  if (!framed_state.has_frozen()) {
    throw Error(ErrorKind::not_framed, "quiver has no frozen vertices");
  }
  CMatrix c;
  c.labels = framed_state.mutable_labels();
  std::size_t n = c.labels.size();
  c.values = IntMatrix(n, n);
  std::vector<std::size_t> rows(n);
  std::vector<std::size_t> cols(n);
  for (std::size_t k = 0; k < n; ++k) {
    rows[k] = framed_state.index_of(c.labels[k]);
    auto partner = framed_state.frozen_partner(c.labels[k]);
    if (!partner) {
      throw Error(ErrorKind::not_framed,
                  "vertex " + std::to_string(c.labels[k]) + " has no frozen partner");
    }
    cols[k] = framed_state.index_of(*partner);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c.values(i, j) = framed_state.at(rows[i], cols[j]);
  for (std::size_t i = 0; i < n; ++i) (void)detail::row_color(c.values, i, c.labels[i]);
  return c;
}

/// C-matrix after framing `q` and mutating along `s`.
inline CMatrix c_matrix(Quiver const& q, MutationSequence const& s) {
  return c_matrix_of(mutate_seq(framed(q), s));
}

/// Green when every arrow to a frozen vertex points outward, red when every
/// one points inward.
inline Color vertex_color(Quiver const& framed_state, Label v) {
  if (!framed_state.has_frozen()) {
    throw Error(ErrorKind::not_framed, "quiver has no frozen vertices");
  }
  if (framed_state.is_frozen(v)) {
    throw Error(ErrorKind::frozen_vertex, "color is defined for mutable vertices only");
  }
  std::size_t i = framed_state.index_of(v);
  bool pos = false;
  bool neg = false;
  for (std::size_t j = 0; j < framed_state.size(); ++j) {
    if (!framed_state.is_frozen_index(j)) continue;
    pos = pos || framed_state.at(i, j) > 0;
    neg = neg || framed_state.at(i, j) < 0;
  }
  if (pos && neg) {
    throw Error(ErrorKind::sign_coherence_violation,
                "vertex " + std::to_string(v) + " is neither red nor green");
  }
  if (!pos && !neg) throw Error(ErrorKind::zero_row, "vertex " + std::to_string(v) + " has no frozen arrows");
  return pos ? Color::green : Color::red;
}

inline bool all_red(Quiver const& framed_state) {
  for (Label v : framed_state.mutable_labels())
    if (vertex_color(framed_state, v) != Color::red) return false;
  return true;
}

}  // namespace redcycle
