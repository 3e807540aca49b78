#pragma once

// Command-line front end. Exit status: 0 success, 1 domain error, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gradalg/gradalg.hpp"
#include "gradalg/session.hpp"

namespace gradalg::cli {

inline std::string format_element(const FgAbelianGroup::Element& e) {
  if (e.size() == 1) return e[0].get_str();
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + e[i].get_str();
  return s + ")";
}

inline std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

/// Parses a comma-separated list of 1-based positive integers into 0-based values.
inline std::vector<std::size_t> parse_one_based(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(text)) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || v < 1) throw CLI::ValidationError(what, "expected positive integers, got " + item);
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  if (out.empty()) throw CLI::ValidationError(what, "empty list");
  return out;
}

inline Orientation parse_orientation(const std::string& s) {
  if (s == "linear") return Orientation::Linear;
  if (s == "reversed") return Orientation::Reversed;
  return Orientation::Alternating;
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"graded cluster algebra workbench"};
  app.require_subcommand(1);

  std::string seed_file;
  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", seed_file, "seed document (default: stdin)"); };
  auto load = [&]() {
    if (seed_file.empty()) return parse_seed(read_all(in));
    std::ifstream f(seed_file);
    if (!f) fail(ErrorKind::ParseError, "cannot open " + seed_file);
    return parse_seed(read_all(f));
  };

  std::string at, group_spec, type = "A", word, checks = "all", orientation = "linear", host = "127.0.0.1";
  std::size_t depth = 0, rank = 0, k = 0, n = 0, threads = 1;
  int port = 8080;
  std::uint64_t rng_seed = 1;
  std::optional<std::size_t> grading;
  bool balanced = false;

  auto* mutate = app.add_subcommand("mutate", "mutate a graded seed at 1-based indices");
  add_seed(mutate);
  mutate->add_option("--at", at, "k[,k2,...]")->required();

  auto* standard = app.add_subcommand("standard", "attach the standard Z-gradings");
  add_seed(standard);

  auto* gradings = app.add_subcommand("gradings", "gradings with values in a group");
  add_seed(gradings);
  gradings->add_option("--group", group_spec, "Z^m or Z^a x Z/d1 x ...")->required();

  auto* k0 = app.add_subcommand("k0", "Grothendieck group presentation");
  add_seed(k0);

  auto* explore_cmd = app.add_subcommand("explore", "enumerate cluster variables");
  add_seed(explore_cmd);
  explore_cmd->add_option("--depth", depth, "mutation depth")->required();
  explore_cmd->add_option("--grading", grading, "0-based grading index for a degree report");
  explore_cmd->add_flag("--balanced", balanced, "balancedness verdict for --grading");
  explore_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));

  auto* verify = app.add_subcommand("verify", "check homogeneity of every variable up to a depth");
  add_seed(verify);
  verify->add_option("--depth", depth, "mutation depth")->required();
  verify->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));

  auto* birs = app.add_subcommand("birs", "modules V_k for a reduced word and their checks");
  birs->add_option("--type", type, "A, D or E")->required();
  birs->add_option("--rank", rank, "rank")->required();
  birs->add_option("--word", word, "i_n,...,i_1 (1-based)")->required();
  birs->add_option("--check", checks, "all, none, or a comma-separated list of checks");
  birs->add_option("--rng-seed", rng_seed, "seed for sampled modules");

  auto* grass = app.add_subcommand("grassmannian", "rectangles seed of Gr(k, n)");
  grass->add_option("--k", k, "k")->required();
  grass->add_option("--n", n, "n")->required();

  app.add_subcommand("markov", "the Markov seed with grading (1,1,1)");

  auto* dynkin = app.add_subcommand("dynkin", "Dynkin seed with its standard gradings");
  dynkin->add_option("--type", type, "A, D or E")->required();
  dynkin->add_option("--rank", rank, "rank")->required();
  dynkin->add_option("--orientation", orientation, "linear, reversed or alternating")
      ->check(CLI::IsMember({"linear", "reversed", "alternating"}));

  auto* serve = app.add_subcommand("serve", "HTTP session service");
  serve->add_option("--port", port, "port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }
  auto one_letter = [&]() {
    if (type.size() != 1) throw CLI::ValidationError("--type", "expected a single letter");
    return type[0];
  };

  try {
    if (*mutate) {
      auto seq = parse_one_based(at, "--at");
      GradedSeed gs = load();
      for (auto kk : seq) gs = mutate_graded_seed(gs, kk);
      out << serialize_seed(gs) << "\n";
    } else if (*standard) {
      GradedSeed gs = load();
      out << serialize_seed(standard_gradings(gs.seed)) << "\n";
    } else if (*gradings) {
      FgAbelianGroup a = FgAbelianGroup::parse(group_spec);
      GradedSeed gs = load();
      GradingSpace space = grading_space(gs.seed, a);
      out << "group " << space.abstract.to_string() << "\n";
      for (const auto& g : space.concrete.generators) {
        out << "generator";
        for (const auto& e : g) out << " " << format_element(e);
        out << "\n";
      }
    } else if (*k0) {
      GradedSeed gs = load();
      out << presentation_from_exchange_matrix(gs.seed).invariants.to_string() << "\n";
    } else if (*explore_cmd) {
      if (balanced && !grading) throw CLI::ValidationError("--balanced", "requires --grading");
      GradedSeed gs = load();
      auto report = explore(initial_state(gs), depth, {static_cast<unsigned>(threads)});
      if (!grading) {
        out << report.serialize();
      } else {
        out << "clusters " << report.clusters_visited << " closed " << (report.closed ? "true" : "false")
            << " variables " << report.variables.size() << "\n";
        for (const auto& d : degree_report(report, *grading)) out << format_element(d) << "\n";
        if (balanced) {
          auto v = balanced_check(report, *grading);
          out << "verdict " << to_string(v.status);
          if (v.witness)
            out << " witness " << format_element(*v.witness) << " count " << v.count_degree << " negative "
                << v.count_negative;
          if (v.all_positive) out << " all_positive " << (*v.all_positive ? "true" : "false");
          out << "\n";
        }
      }
    } else if (*verify) {
      GradedSeed gs = load();
      auto report = explore(initial_state(gs), depth, {static_cast<unsigned>(threads)});
      std::size_t bad = 0;
      for (const auto& v : report.variables)
        if (!v.homogeneous || !v.degree_consistent) {
          ++bad;
          err << "not homogeneous: " << v.poly.serialize() << "\n";
        }
      out << "variables " << report.variables.size() << " clusters " << report.clusters_visited << " closed "
          << (report.closed ? "true" : "false") << " homogeneous " << (bad ? "false" : "true") << "\n";
      if (bad) return 1;
    } else if (*birs) {
      auto d = dynkin_diagram(one_letter(), rank);
      auto letters = parse_one_based(word, "--word");
      auto alg = build_preprojective(d);
      auto model = birs_modules(alg, letters);
      out << model_report(model);
      std::vector<std::string> names;
      if (checks == "none") {
        names = {};
      } else if (checks != "all") {
        names = split_list(checks);
        for (const auto& c : names)
          if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
            throw CLI::ValidationError("--check", "unknown check " + c);
      }
      if (checks != "none") {
        bool all_ok = true;
        for (const auto& res : run_checks(model, alg, names, rng_seed)) {
          out << "check " << res.name << " " << (res.passed ? "PASS" : "FAIL");
          if (!res.detail.empty()) out << " " << res.detail;
          out << "\n";
          all_ok = all_ok && res.passed;
        }
        if (!all_ok) return 1;
      }
    } else if (*grass) {
      out << serialize_seed(grassmannian_seed(k, n)) << "\n";
    } else if (app.got_subcommand("markov")) {
      out << serialize_seed(markov_seed()) << "\n";
    } else if (*dynkin) {
      out << serialize_seed(standard_gradings(dynkin_seed(one_letter(), rank, parse_orientation(orientation))))
          << "\n";
    } else if (*serve) {
      SessionStore store;
      httplib::Server server;
      register_routes(server, store);
      err << "listening on " << host << ":" << port << "\n";
      if (!server.listen(host, port)) fail(ErrorKind::BadParameters, "cannot bind " + host + ":" + std::to_string(port));
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace gradalg::cli
