#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "redcycle/error.hpp"

namespace redcycle {

/// Vertex labels are opaque positive integers; they are never renumbered.
using Label = std::int64_t;

/// A bijection on a finite set of labels, identity on every label it does
/// not mention. Only the moved points are stored, so two permutations that
/// act identically compare equal.
class Permutation {
 public:
  Permutation() = default;

  /// Builds from explicit label -> image pairs; fixed points are dropped.
  static Permutation from_map(std::map<Label, Label> const& mapping) {
    Permutation p;
    std::set<Label> images;
    for (auto [from, to] : mapping) {
      if (!images.insert(to).second) {
        throw Error(ErrorKind::parse_error, "mapping is not injective");
      }
    }
    for (auto [from, to] : mapping) {
      if (!mapping.contains(to) && from != to) {
        // image outside the domain: only a bijection if domain == image set
        throw Error(ErrorKind::parse_error,
                    "mapping is not a permutation of its domain");
      }
      if (from != to) p.moved_.emplace(from, to);
    }
    return p;
  }

  static Permutation from_cycles(std::vector<std::vector<Label>> const& cycles) {
    std::map<Label, Label> mapping;
    for (auto const& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        Label from = cycle[i];
        Label to = cycle[(i + 1) % cycle.size()];
        if (!mapping.emplace(from, to).second) {
          throw Error(ErrorKind::parse_error,
                      "label repeated in cycle notation: " + std::to_string(from));
        }
      }
    }
    return from_map(mapping);
  }

  /// Parses cycle notation such as "(1,4)(2,3)"; "()" or "" is the identity.
  static Permutation parse(std::string_view text) {
    std::vector<std::vector<Label>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') {
        throw Error(ErrorKind::parse_error, "expected '(' in permutation");
      }
      ++i;
      std::vector<Label> cycle;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw Error(ErrorKind::parse_error, "expected label");
        cycle.push_back(std::stoll(std::string(text.substr(start, i - start))));
        skip_ws();
        if (i < text.size() && text[i] == ',') ++i;
      }
      if (i >= text.size()) throw Error(ErrorKind::parse_error, "unclosed cycle");
      ++i;
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      skip_ws();
    }
    return from_cycles(cycles);
  }

  Label operator()(Label x) const {
    auto it = moved_.find(x);
    return it == moved_.end() ? x : it->second;
  }

  [[nodiscard]] bool is_identity() const noexcept { return moved_.empty(); }
  [[nodiscard]] std::map<Label, Label> const& moved() const noexcept { return moved_; }

  [[nodiscard]] Permutation inverse() const {
    Permutation p;
    for (auto [from, to] : moved_) p.moved_.emplace(to, from);
    return p;
  }

  /// Cycles of length >= 2, each starting at its smallest label, sorted.
  [[nodiscard]] std::vector<std::vector<Label>> cycles() const {
    std::vector<std::vector<Label>> out;
    std::set<Label> seen;
    for (auto [start, unused] : moved_) {
      if (seen.contains(start)) continue;
      std::vector<Label> cycle;
      Label x = start;
      do {
        cycle.push_back(x);
        seen.insert(x);
        x = (*this)(x);
      } while (x != start);
      out.push_back(std::move(cycle));
    }
    return out;
  }

  /// Smallest k >= 1 with p^k = id.
  [[nodiscard]] std::int64_t order() const {
    std::int64_t k = 1;
    for (auto const& c : cycles()) k = std::lcm(k, static_cast<std::int64_t>(c.size()));
    return k;
  }

  [[nodiscard]] Permutation pow(std::int64_t k) const;

  [[nodiscard]] std::string to_string() const {
    if (moved_.empty()) return "()";
    std::string s;
    for (auto const& c : cycles()) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0) s += ',';
        s += std::to_string(c[i]);
      }
      s += ')';
    }
    return s;
  }

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::map<Label, Label> moved_;
};

/// (lhs * rhs)(x) = lhs(rhs(x)).
inline Permutation operator*(Permutation const& lhs, Permutation const& rhs) {
  std::map<Label, Label> mapping;
  for (auto [from, to] : rhs.moved()) mapping[from] = lhs(to);
  for (auto [from, to] : lhs.moved()) {
    if (!mapping.contains(from)) mapping[from] = to;
  }
  return Permutation::from_map(mapping);
}

inline Permutation Permutation::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  Permutation result;
  for (std::int64_t i = 0; i < k; ++i) result = *this * result;
  return result;
}

}  // namespace redcycle
