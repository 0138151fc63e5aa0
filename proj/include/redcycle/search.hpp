#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "redcycle/framing.hpp"
#include "redcycle/isomorphism.hpp"
#include "redcycle/quiver.hpp"
#include "redcycle/reddening.hpp"
#include "redcycle/sequence.hpp"

namespace redcycle {

struct SearchOptions {
  std::size_t max_len = 6;
  /// Never mutate twice in a row at the same vertex.
  bool reduced_only = true;
  /// Only mutate at green vertices.
  bool green_only = false;
  /// Stop at the lexicographically smallest hit.
  bool first_only = false;
  /// Keep extending a branch after it has turned all red. Off by default:
  /// a hit is then never a proper extension of another hit.
  bool extend_past_red = false;
  /// Worker threads; 0 or 1 runs sequentially.
  std::size_t workers = 1;
  /// Branches whose exchange matrix grows past this, or whose next
  /// mutation would overflow, are abandoned and counted.
  Entry weight_limit = Entry{1} << 40;
};

struct SearchHit {
  MutationSequence sequence;
  Permutation permutation;

  friend bool operator==(SearchHit const&, SearchHit const&) = default;
};

struct SearchResult {
  /// Sorted lexicographically by sequence.
  std::vector<SearchHit> hits;
  /// Number of branches cut by the weight limit.
  std::size_t overflow_branches = 0;
  std::size_t nodes = 0;
};

namespace detail {

class ReddeningSearch {
 public:
  ReddeningSearch(SearchOptions const& opt, std::vector<Label> labels)
      : opt_(opt), labels_(std::move(labels)) {}

  void run(Quiver const& state, MutationSequence& path) {
    ++out_.nodes;
    if (done_) return;
    if (state.max_abs_entry() > opt_.weight_limit) {
      ++out_.overflow_branches;
      return;
    }
    if (!path.empty() || labels_.empty()) {
      if (auto sigma = reddening_permutation(c_matrix_of(state))) {
        out_.hits.push_back({path, *sigma});
        if (opt_.first_only) done_ = true;
        if (opt_.first_only || !opt_.extend_past_red) return;
      }
    }
    if (path.size() >= opt_.max_len) return;
    for (Label v : labels_) {
      if (opt_.reduced_only && !path.empty() && path.entries().back() == v) continue;
      if (opt_.green_only && vertex_color(state, v) != Color::green) continue;
      std::optional<Quiver> next;
      try {
        next = mutate(state, v);
      } catch (Error const& e) {
        if (e.kind() != ErrorKind::overflow) throw;
        ++out_.overflow_branches;
        continue;
      }
      path.push_back(v);
      run(*next, path);
      path.pop_back();
      if (done_) return;
    }
  }

  SearchResult take() { return std::move(out_); }

 private:
  SearchOptions const& opt_;
  std::vector<Label> labels_;
  SearchResult out_;
  bool done_ = false;
};

}  // namespace detail

/// Depth-first enumeration of every sequence of length at most max_len
/// (subject to the flags) that turns the framed quiver all red. Unless
/// extend_past_red is set, a branch ends at its first all-red state. With
/// several workers the first move is split between them and the results
/// are merged in order.
inline SearchResult search_reddening(Quiver const& q, SearchOptions const& opt) {
  Quiver start = framed(mutable_part(q));
  std::vector<Label> labels = start.mutable_labels();
  SearchResult total;
  if (labels.empty() || opt.max_len == 0) {
    detail::ReddeningSearch s(opt, labels);
    MutationSequence path;
    s.run(start, path);
    return s.take();
  }

  auto branch = [&](Label v) {
    detail::ReddeningSearch s(opt, labels);
    MutationSequence path;
    path.push_back(v);
    s.run(mutate(start, v), path);
    return s.take();
  };

  std::vector<SearchResult> parts(labels.size());
  std::size_t workers = std::max<std::size_t>(1, opt.workers);
  if (workers == 1 || opt.first_only) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (opt.green_only && vertex_color(start, labels[i]) != Color::green) continue;
      parts[i] = branch(labels[i]);
      if (opt.first_only && !parts[i].hits.empty()) break;
    }
  } else {
    std::vector<std::future<SearchResult>> pending(labels.size());
    std::size_t next = 0;
    while (next < labels.size()) {
      std::size_t batch_end = std::min(labels.size(), next + workers);
      for (std::size_t i = next; i < batch_end; ++i) {
        if (opt.green_only && vertex_color(start, labels[i]) != Color::green) continue;
        pending[i] = std::async(std::launch::async, branch, labels[i]);
      }
      for (std::size_t i = next; i < batch_end; ++i)
        if (pending[i].valid()) parts[i] = pending[i].get();
      next = batch_end;
    }
  }

  total.nodes = 1;
  for (auto& p : parts) {
    total.nodes += p.nodes;
    total.overflow_branches += p.overflow_branches;
    for (auto& h : p.hits) total.hits.push_back(std::move(h));
  }
  std::sort(total.hits.begin(), total.hits.end(),
            [](SearchHit const& a, SearchHit const& b) { return a.sequence < b.sequence; });
  if (opt.first_only && total.hits.size() > 1) total.hits.resize(1);
  return total;
}

struct ClassEnumeration {
  /// Canonical forms in discovery order.
  std::vector<std::string> forms;
  std::vector<Quiver> representatives;
  bool exhausted = false;
};

/// Breadth-first walk of the mutation class, one node per isomorphism
/// class, stopping after node_budget classes.
inline ClassEnumeration enumerate_class(Quiver const& q, std::size_t node_budget = 100000) {
  ClassEnumeration out;
  std::set<std::string> seen;
  std::deque<Quiver> queue;
  Quiver start = mutable_part(q);
  std::string f = canonical_form(start);
  seen.insert(f);
  out.forms.push_back(f);
  out.representatives.push_back(start);
  queue.push_back(start);
  while (!queue.empty()) {
    Quiver x = std::move(queue.front());
    queue.pop_front();
    for (Label v : x.mutable_labels()) {
      Quiver y = mutate(x, v);
      std::string fy = canonical_form(y);
      if (!seen.insert(fy).second) continue;
      if (out.forms.size() >= node_budget) return out;
      out.forms.push_back(fy);
      out.representatives.push_back(y);
      queue.push_back(std::move(y));
    }
  }
  out.exhausted = true;
  return out;
}

}  // namespace redcycle
