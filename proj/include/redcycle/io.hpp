#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "redcycle/error.hpp"
#include "redcycle/framing.hpp"
#include "redcycle/int_matrix.hpp"
#include "redcycle/permutation.hpp"
#include "redcycle/quiver.hpp"
#include "redcycle/sequence.hpp"

namespace redcycle::io {

using json = nlohmann::json;

namespace detail {

inline std::vector<Label> labels_from(json const& j, char const* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw Error(ErrorKind::parse_error, std::string("missing array \"") + key + "\"");
  }
  std::vector<Label> out;
  for (auto const& x : j.at(key)) {
    if (!x.is_number_integer()) throw Error(ErrorKind::parse_error, "labels must be integers");
    Label v = x.get<Label>();
    if (v <= 0) throw Error(ErrorKind::parse_error, "labels must be positive");
    out.push_back(v);
  }
  return out;
}

inline std::vector<FramePair> frames_from(json const& j) {
  std::vector<FramePair> out;
  if (!j.contains("frozen")) return out;
  for (auto const& p : j.at("frozen")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw Error(ErrorKind::parse_error, "frozen entries must be [mutable, frozen] pairs");
    }
    out.push_back({p[0].get<Label>(), p[1].get<Label>()});
  }
  return out;
}

}  // namespace detail

/// Accepts {"vertices", "frozen"?, "arrows"} or {"b_matrix", "labels",
/// "frozen"?}. In the arrows form frozen labels may be omitted from
/// "vertices".
inline Quiver quiver_from_json(json const& j) {
  if (!j.is_object()) throw Error(ErrorKind::parse_error, "quiver must be a JSON object");
  auto frames = detail::frames_from(j);
  std::set<Label> frozen;
  for (auto const& f : frames) frozen.insert(f.frozen_label);

  if (j.contains("b_matrix")) {
    auto labels = detail::labels_from(j, "labels");
    auto const& rows = j.at("b_matrix");
    if (!rows.is_array()) throw Error(ErrorKind::parse_error, "b_matrix must be an array");
    std::vector<std::vector<Entry>> data;
    for (auto const& row : rows) {
      if (!row.is_array()) throw Error(ErrorKind::parse_error, "b_matrix rows must be arrays");
      std::vector<Entry> r;
      for (auto const& x : row) {
        if (!x.is_number_integer()) throw Error(ErrorKind::parse_error, "b_matrix entries must be integers");
        r.push_back(x.get<Entry>());
      }
      data.push_back(std::move(r));
    }
    if (data.size() != labels.size()) {
      throw Error(ErrorKind::invalid_quiver, "b_matrix size does not match label count");
    }
    for (auto const& r : data) {
      if (r.size() != labels.size()) throw Error(ErrorKind::invalid_quiver, "b_matrix is not square");
    }
    return Quiver::from_matrix(labels, frames, IntMatrix::from_rows(data));
  }

  std::vector<Label> mut;
  for (Label v : detail::labels_from(j, "vertices"))
    if (!frozen.contains(v)) mut.push_back(v);
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    for (auto const& a : j.at("arrows")) {
      if (!a.is_array() || (a.size() != 2 && a.size() != 3)) {
        throw Error(ErrorKind::parse_error, "arrows must be [src, dst] or [src, dst, mult]");
      }
      for (auto const& x : a)
        if (!x.is_number_integer()) throw Error(ErrorKind::parse_error, "arrow fields must be integers");
      Entry mult = a.size() == 3 ? a[2].get<Entry>() : 1;
      if (mult < 1) throw Error(ErrorKind::invalid_quiver, "arrow multiplicity must be at least 1");
      arrows.push_back({a[0].get<Label>(), a[1].get<Label>(), mult});
    }
  }
  return Quiver::from_arrows(mut, frames, arrows);
}

inline Quiver parse_quiver(std::string const& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::exception const& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
  return quiver_from_json(j);
}

/// Canonical arrows form: mutable vertices ascending, arrows sorted by
/// (src, dst).
inline json quiver_to_json(Quiver const& q) {
  json j;
  j["vertices"] = q.mutable_labels();
  if (q.has_frozen()) {
    json fr = json::array();
    for (auto const& f : q.frames()) fr.push_back({f.mutable_label, f.frozen_label});
    j["frozen"] = fr;
  }
  json arrows = json::array();
  for (auto const& a : q.arrows()) arrows.push_back({a.from, a.to, a.count});
  j["arrows"] = arrows;
  return j;
}

inline std::string print_quiver(Quiver const& q) { return quiver_to_json(q).dump(); }

inline json matrix_to_json(IntMatrix const& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(m(i, k));
    rows.push_back(r);
  }
  return rows;
}

/// Graphviz digraph; frozen vertices are boxes and multiplicities above one
/// are edge labels.
inline std::string to_dot(Quiver const& q, std::string const& name = "Q") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Label v : q.labels()) {
    out << "  " << v;
    if (q.is_frozen(v)) out << " [shape=box]";
    out << ";\n";
  }
  for (auto const& a : q.arrows()) {
    out << "  " << a.from << " -> " << a.to;
    if (a.count > 1) out << " [label=\"" << a.count << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace redcycle::io
