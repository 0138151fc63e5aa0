#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "redcycle/redcycle.hpp"

namespace redcycle::cli {

using io::json;

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kBadInput = 2;

namespace detail {

// Failed verification rather than bad input.
inline bool is_verification_failure(ErrorKind k) {
  switch (k) {
    case ErrorKind::not_reddening:
    case ErrorKind::non_identity_permutation:
    case ErrorKind::cycle_verification_failed:
    case ErrorKind::overflow:
    case ErrorKind::internal_contradiction:
    case ErrorKind::sign_coherence_violation:
    case ErrorKind::zero_row:
      return true;
    default:
      return false;
  }
}

inline std::string read_source(std::string const& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// A file path, "-" for stdin, or catalog:NAME[/KEY].
inline Quiver load_quiver(std::string const& source) {
  std::string const prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    std::string rest = source.substr(prefix.size());
    auto slash = rest.find('/');
    auto item = catalog::paper_item(rest.substr(0, slash));
    if (slash == std::string::npos) {
      if (item.quivers.empty()) throw Error(ErrorKind::unknown_name, "item has no quivers");
      return item.quivers.front().second;
    }
    return item.quiver(rest.substr(slash + 1));
  }
  return io::parse_quiver(read_source(source));
}

inline MutationSequence load_sequence(std::string const& text, bool do_reduce) {
  auto s = MutationSequence::parse(text);
  return do_reduce ? reduce(s) : s;
}

// "1,0,2;0,3,1" or a JSON array of rows.
inline IntMatrix parse_matrix(std::string const& text) {
  std::vector<std::vector<Entry>> rows;
  std::string t = text;
  if (!t.empty() && t.front() == '[') {
    json j;
    try {
      j = json::parse(t);
      rows = j.get<std::vector<std::vector<Entry>>>();
    } catch (json::exception const& e) {
      throw Error(ErrorKind::parse_error, e.what());
    }
  } else {
    std::stringstream ss(t);
    std::string row;
    while (std::getline(ss, row, ';')) {
      auto entries = MutationSequence::parse(row).entries();
      rows.emplace_back(entries.begin(), entries.end());
    }
  }
  for (auto const& r : rows)
    if (r.size() != rows.front().size()) throw Error(ErrorKind::parse_error, "ragged matrix");
  return IntMatrix::from_rows(rows);
}

inline std::size_t budget_or(std::size_t fallback) {
  if (char const* env = std::getenv("REDCYCLE_BUDGET")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (std::exception const&) {
    }
    throw Error(ErrorKind::parse_error, "REDCYCLE_BUDGET must be a positive integer");
  }
  return fallback;
}

inline json hits_json(SearchResult const& r) {
  json hits = json::array();
  for (auto const& h : r.hits)
    hits.push_back({{"sequence", h.sequence.entries()}, {"permutation", h.permutation.to_string()}});
  return {{"hits", hits}, {"overflow_branches", r.overflow_branches}, {"nodes", r.nodes}};
}

inline json report_json(CycleReport const& r) {
  return {{"length", r.length},
          {"reduced", r.is_reduced},
          {"closes_equal", r.closes_equal},
          {"closes_iso", r.closes_iso ? json(r.closes_iso->to_string()) : json(nullptr)},
          {"simple", r.simple},
          {"all_abundant", r.all_abundant}};
}

inline void print_report(std::ostream& out, CycleReport const& r) {
  out << "length " << r.length << "\n"
      << "reduced " << r.is_reduced << "\n"
      << "closes_equal " << r.closes_equal << "\n"
      << "closes_iso " << (r.closes_iso ? r.closes_iso->to_string() : "none") << "\n"
      << "simple " << r.simple << "\n"
      << "all_abundant " << r.all_abundant << "\n";
}

inline int run_checks(std::vector<std::string> const& names, std::ostream& out, bool as_json) {
  bool all_ok = true;
  json report = json::array();
  for (auto const& name : names) {
    auto item = catalog::paper_item(name);
    for (auto const& c : item.verify()) {
      all_ok = all_ok && c.ok;
      if (as_json) {
        report.push_back({{"item", name}, {"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      } else {
        out << (c.ok ? "PASS " : "FAIL ") << name << ": " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
      }
    }
  }
  if (as_json) out << report.dump(2) << "\n";
  return all_ok ? kOk : kFailed;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quiver mutation, reddening sequences and mutation cycles", "redcycle"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print JSON reports");

  std::string in;
  std::string seq_text;
  bool do_reduce = false;
  auto add_in = [&](CLI::App* sub) { sub->add_option("--in", in, "Quiver file, - or catalog:NAME[/KEY]")->required(); };
  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--seq", seq_text, "Comma-separated labels")->required();
    sub->add_flag("--reduce", do_reduce, "Reduce the sequence first");
  };

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate along a sequence");
  add_in(mutate_cmd);
  add_seq(mutate_cmd);

  auto* cmatrix_cmd = app.add_subcommand("cmatrix", "C-matrix after a sequence");
  add_in(cmatrix_cmd);
  add_seq(cmatrix_cmd);

  bool green = false;
  auto* rv_cmd = app.add_subcommand("reddening-verify", "Check a reddening sequence");
  add_in(rv_cmd);
  add_seq(rv_cmd);
  rv_cmd->add_flag("--green", green, "Also require a maximal green sequence");

  SearchOptions opt;
  bool not_reduced = false;
  auto add_search = [&](CLI::App* sub) {
    add_in(sub);
    sub->add_option("--max-len", opt.max_len, "Longest sequence to try");
    sub->add_flag("--all-sequences", not_reduced, "Allow immediate repeats");
    sub->add_flag("--first", opt.first_only, "Stop at the first hit");
    sub->add_flag("--extend-past-red", opt.extend_past_red, "Keep extending all-red branches");
    sub->add_option("--workers", opt.workers, "Worker threads");
  };
  auto* rs_cmd = app.add_subcommand("reddening-search", "Search for reddening sequences");
  add_search(rs_cmd);
  rs_cmd->add_flag("--green", opt.green_only, "Only mutate green vertices");
  auto* mgs_cmd = app.add_subcommand("mgs-search", "Search for maximal green sequences");
  add_search(mgs_cmd);

  std::string tail;
  std::string head;
  std::string tail_seq;
  std::string head_seq;
  std::string a_text;
  auto* build_cmd = app.add_subcommand("cycle-build", "Build a mutation cycle on a triangular extension");
  build_cmd->require_subcommand(1);
  auto add_build = [&](CLI::App* sub, char const* ts, char const* hs) {
    sub->add_option("--tail", tail, "Tail quiver")->required();
    sub->add_option("--head", head, "Head quiver")->required();
    sub->add_option(ts, tail_seq, "Tail sequence")->required();
    sub->add_option(hs, head_seq, "Head sequence")->required();
    sub->add_option("--a", a_text, "Cross matrix, rows split by ';'")->required();
  };
  auto* b_equal = build_cmd->add_subcommand("equal", "Both permutations are the identity");
  add_build(b_equal, "--tail-seq", "--head-seq");
  auto* b_general = build_cmd->add_subcommand("general", "Arbitrary permutations");
  add_build(b_general, "--tail-seq", "--head-seq");
  auto* b_acyclic = build_cmd->add_subcommand("acyclic", "Mutation-acyclic factors");
  add_build(b_acyclic, "--m", "--n");

  auto* cv_cmd = app.add_subcommand("cycle-verify", "Check a mutation cycle");
  add_in(cv_cmd);
  add_seq(cv_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Fork, key and pre-fork predicates");
  add_in(classify_cmd);

  std::optional<std::size_t> budget;
  bool labeled = false;
  auto* forkless_cmd = app.add_subcommand("forkless", "Explore the forkless part of a mutation class");
  add_in(forkless_cmd);
  forkless_cmd->add_option("--budget", budget, "Node budget");
  forkless_cmd->add_flag("--labeled", labeled, "Deduplicate labeled quivers only");

  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate a mutation class up to isomorphism");
  add_in(enum_cmd);
  enum_cmd->add_option("--budget", budget, "Node budget");

  auto* dist_cmd = app.add_subcommand("distinguishing", "Test a distinguishing matrix");
  add_in(dist_cmd);
  add_seq(dist_cmd);
  dist_cmd->add_option("--a", a_text, "Cross matrix, rows split by ';'")->required();

  std::string item_name;
  auto* catalog_cmd = app.add_subcommand("catalog", "Named quivers and sequences");
  catalog_cmd->require_subcommand(1);
  auto* cat_list = catalog_cmd->add_subcommand("list", "List item names");
  auto* cat_show = catalog_cmd->add_subcommand("show", "Print an item");
  cat_show->add_option("name", item_name, "Item name")->required();
  auto* cat_verify = catalog_cmd->add_subcommand("verify", "Recompute an item's checks");
  cat_verify->add_option("name", item_name, "Item name or all")->required();

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  add_in(dot_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run catalog checks");
  verify_cmd->add_option("--catalog", item_name, "Item name or all")->required();

  std::vector<std::string> argv_store{"redcycle"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char const*> argv;
  for (auto const& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (mutate_cmd->parsed()) {
      Quiver q = mutate_seq(detail::load_quiver(in), detail::load_sequence(seq_text, do_reduce));
      out << io::quiver_to_json(q).dump(as_json ? 2 : -1) << "\n";
      return kOk;
    }
    if (cmatrix_cmd->parsed()) {
      auto c = c_matrix(detail::load_quiver(in), detail::load_sequence(seq_text, do_reduce));
      if (as_json) {
        out << json{{"labels", c.labels}, {"c_matrix", io::matrix_to_json(c.values)}}.dump(2) << "\n";
      } else {
        out << to_string(c.values) << "\n";
      }
      return kOk;
    }
    if (rv_cmd->parsed()) {
      Quiver q = detail::load_quiver(in);
      auto s = detail::load_sequence(seq_text, do_reduce);
      auto sigma = green ? is_maximal_green(q, s) : is_reddening(q, s);
      if (as_json) {
        out << json{{"reddening", sigma.has_value()},
                    {"permutation", sigma ? json(sigma->to_string()) : json(nullptr)}}
                   .dump(2)
            << "\n";
      } else {
        out << (sigma ? "reddening " + sigma->to_string() : std::string("not reddening")) << "\n";
      }
      return sigma ? kOk : kFailed;
    }
    if (rs_cmd->parsed() || mgs_cmd->parsed()) {
      opt.reduced_only = !not_reduced;
      if (mgs_cmd->parsed()) opt.green_only = true;
      auto r = search_reddening(detail::load_quiver(in), opt);
      if (as_json) {
        out << detail::hits_json(r).dump(2) << "\n";
      } else {
        for (auto const& h : r.hits) out << h.sequence.to_string() << " " << h.permutation.to_string() << "\n";
        out << r.hits.size() << " hits, " << r.nodes << " nodes, " << r.overflow_branches
            << " overflow branches\n";
      }
      return kOk;
    }
    if (build_cmd->parsed()) {
      Quiver t = detail::load_quiver(tail);
      Quiver h = detail::load_quiver(head);
      auto ms = detail::load_sequence(tail_seq, false);
      auto ns = detail::load_sequence(head_seq, false);
      IntMatrix a = detail::parse_matrix(a_text);
      CycleConstruction c = b_equal->parsed()     ? build_cycle_equal(t, ms, h, ns, a)
                            : b_general->parsed() ? build_cycle_general(t, ms, h, ns, a)
                                                  : build_acyclic_cycle(t, ms, h, ns, a);
      auto r = verify_cycle(c.quiver, c.sequence);
      if (as_json) {
        out << json{{"quiver", io::quiver_to_json(c.quiver)},
                    {"sequence", c.sequence.entries()},
                    {"rounds", c.rounds},
                    {"report", detail::report_json(r)}}
                   .dump(2)
            << "\n";
      } else {
        out << "sequence " << c.sequence.to_string() << "\n";
        detail::print_report(out, r);
      }
      return r.closes_equal ? kOk : kFailed;
    }
    if (cv_cmd->parsed()) {
      auto r = verify_cycle(detail::load_quiver(in), detail::load_sequence(seq_text, do_reduce));
      if (as_json) {
        out << detail::report_json(r).dump(2) << "\n";
      } else {
        detail::print_report(out, r);
      }
      return r.closes_equal ? kOk : kFailed;
    }
    if (classify_cmd->parsed()) {
      auto rep = classify(detail::load_quiver(in));
      json keys = json::array();
      for (auto const& k : rep.key_pairs) keys.push_back({k.k, k.k_prime, k.b});
      json pre = json::array();
      for (auto const& p : rep.prefork_pairs) pre.push_back({p.k, p.k_prime, p.r});
      json j{{"acyclic", rep.acyclic},   {"abundant", rep.abundant}, {"fork", rep.is_fork()},
             {"fork_returns", rep.fork_returns}, {"key", rep.is_key()}, {"key_pairs", keys},
             {"prefork", rep.is_prefork()}, {"prefork_pairs", pre}};
      if (as_json) {
        out << j.dump(2) << "\n";
      } else {
        for (auto const& [k, v] : j.items()) out << k << " " << v.dump() << "\n";
      }
      return kOk;
    }
    if (forkless_cmd->parsed()) {
      auto res = forkless_explore(detail::load_quiver(in), budget.value_or(detail::budget_or(kDefaultNodeBudget)),
                                  labeled ? ExploreMode::labeled : ExploreMode::isomorphism);
      if (as_json) {
        json keys = json::array();
        for (auto i : res.keys) keys.push_back(io::quiver_to_json(res.nodes[i]));
        out << json{{"nodes", res.nodes.size()}, {"forms", res.forms.size()},
                    {"exhausted", res.exhausted}, {"keys", keys}}
                   .dump(2)
            << "\n";
      } else {
        out << "nodes " << res.nodes.size() << "\nexhausted " << res.exhausted << "\nkeys "
            << res.keys.size() << "\n";
        for (auto i : res.keys) out << io::print_quiver(res.nodes[i]) << "\n";
      }
      return kOk;
    }
    if (enum_cmd->parsed()) {
      auto res = enumerate_class(detail::load_quiver(in), budget.value_or(detail::budget_or(100000)));
      if (as_json) {
        out << json{{"forms", res.forms.size()}, {"exhausted", res.exhausted}}.dump(2) << "\n";
      } else {
        out << "forms " << res.forms.size() << "\nexhausted " << res.exhausted << "\n";
      }
      return kOk;
    }
    if (dist_cmd->parsed()) {
      bool ok = is_distinguishing(detail::load_quiver(in), detail::load_sequence(seq_text, do_reduce),
                                  detail::parse_matrix(a_text));
      out << (as_json ? json{{"distinguishing", ok}}.dump(2) : std::string(ok ? "distinguishing" : "not distinguishing"))
          << "\n";
      return ok ? kOk : kFailed;
    }
    if (cat_list->parsed()) {
      for (auto const& n : catalog::item_names()) out << n << "\n";
      return kOk;
    }
    if (cat_show->parsed()) {
      auto item = catalog::paper_item(item_name);
      json quivers = json::object();
      for (auto const& [k, q] : item.quivers) quivers[k] = io::quiver_to_json(q);
      json seqs = json::object();
      for (auto const& [k, s] : item.sequences) seqs[k] = s.to_string();
      json expected = json::object();
      for (auto const& [k, v] : item.expected) expected[k] = v;
      out << json{{"name", item.name}, {"title", item.title}, {"quivers", quivers},
                  {"sequences", seqs}, {"expected", expected}}
                 .dump(2)
          << "\n";
      return kOk;
    }
    if (cat_verify->parsed() || verify_cmd->parsed()) {
      auto names = item_name == "all" ? catalog::item_names() : std::vector<std::string>{item_name};
      return detail::run_checks(names, out, as_json);
    }
    if (dot_cmd->parsed()) {
      out << io::to_dot(detail::load_quiver(in));
      return kOk;
    }
  } catch (Error const& e) {
    err << e.what() << "\n";
    return detail::is_verification_failure(e.kind()) ? kFailed : kBadInput;
  }
  return kBadInput;
}

}  // namespace redcycle::cli
