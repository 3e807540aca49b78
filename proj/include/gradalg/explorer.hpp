#pragma once

// Breadth-first exploration of the exchange graph: cluster-variable
// enumeration, degree distributions and balancedness verdicts.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gradalg/error.hpp"
#include "gradalg/laurent.hpp"
#include "gradalg/seed.hpp"

namespace gradalg {

struct DiscoveredVariable {
  LaurentPoly poly;
  std::vector<FgAbelianGroup::Element> degrees;  ///< one per grading, from the mutated G
  bool homogeneous = true;      ///< every term has the same degree for every grading
  bool degree_consistent = true;  ///< degree_of agrees with the seed-side degree
};

struct ExplorationReport {
  std::vector<std::string> names;
  std::vector<FgAbelianGroup> groups;  ///< one per grading
  std::vector<DiscoveredVariable> variables;  ///< mutable, canonical order
  std::vector<DiscoveredVariable> frozen;
  std::size_t clusters_visited = 0;
  bool closed = false;
  std::size_t depth_limit = 0;

  bool all_homogeneous() const {
    auto ok = [](const DiscoveredVariable& v) { return v.homogeneous && v.degree_consistent; };
    return std::all_of(variables.begin(), variables.end(), ok) && std::all_of(frozen.begin(), frozen.end(), ok);
  }

  /// One line per variable: degree tuples, then the term list.
  std::string serialize() const {
    std::string out = "clusters " + std::to_string(clusters_visited) + " closed " + (closed ? "true" : "false") +
                      " depth " + std::to_string(depth_limit) + " variables " + std::to_string(variables.size()) +
                      "\n";
    auto line = [](const char* tag, const DiscoveredVariable& v) {
      std::string s = tag;
      for (const auto& d : v.degrees) {
        s += " (";
        for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + d[i].get_str();
        s += ")";
      }
      return s + " " + v.poly.serialize() + "\n";
    };
    for (const auto& v : variables) out += line("mutable", v);
    for (const auto& v : frozen) out += line("frozen", v);
    return out;
  }
};

struct ExploreOptions {
  unsigned threads = 1;
};

namespace detail {

// Degrees are read from the mutated grading and checked against the terms,
// which live in the initial variables and so use the initial grading.
inline DiscoveredVariable describe(const ClusterState& s, std::size_t i, const std::vector<Grading>& initial) {
  DiscoveredVariable v{s.cluster[i], {}, true, true};
  for (std::size_t gi = 0; gi < initial.size(); ++gi) {
    const Grading& g = s.graded_seed.gradings[gi];
    v.degrees.push_back(g.values[i]);
    DegreeResult r = degree_of(s.cluster[i], initial[gi]);
    if (!is_homogeneous(r)) v.homogeneous = false;
    else if (!g.group.equal(std::get<FgAbelianGroup::Element>(r), g.values[i])) v.degree_consistent = false;
  }
  return v;
}

inline std::vector<LaurentPoly> cluster_key(const ClusterState& s) {
  std::vector<LaurentPoly> key(s.cluster.begin(), s.cluster.begin() + static_cast<std::ptrdiff_t>(s.graded_seed.seed.r));
  std::sort(key.begin(), key.end());
  return key;
}

// Mutations of every frontier state in every mutable direction; slot i*r+k.
inline std::vector<ClusterState> expand(const std::vector<ClusterState>& frontier, std::size_t r, unsigned threads) {
  std::vector<ClusterState> out(frontier.size() * r);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t job; (job = next.fetch_add(1)) < out.size();)
      out[job] = mutate_cluster(frontier[job / r], job % r);
  };
  if (threads <= 1 || out.size() < 2) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return out;
}

}  // namespace detail

/// Breadth-first closure of all mutation sequences of length <= depth_limit.
/// Clusters are identified as unordered sets of Laurent polynomials.
inline ExplorationReport explore(const ClusterState& start, std::size_t depth_limit, ExploreOptions options = {}) {
  if (depth_limit == 0) fail(ErrorKind::DepthLimitZero, "depth limit must be positive");
  require_valid(start.graded_seed);
  const Seed& seed = start.graded_seed.seed;
  const std::size_t r = seed.r;

  ExplorationReport report;
  report.names = seed.names;
  report.depth_limit = depth_limit;
  for (const auto& g : start.graded_seed.gradings) report.groups.push_back(g.group);

  std::map<LaurentPoly, DiscoveredVariable> variables;
  std::set<std::vector<LaurentPoly>> seen;
  auto record = [&](const ClusterState& s, std::size_t i) {
    auto it = variables.find(s.cluster[i]);
    if (it == variables.end()) {
      variables.emplace(s.cluster[i], detail::describe(s, i, start.graded_seed.gradings));
    } else {
      // A variable reached along two paths must carry one degree.
      for (std::size_t g = 0; g < s.graded_seed.gradings.size(); ++g)
        if (!s.graded_seed.gradings[g].group.equal(it->second.degrees[g], s.graded_seed.gradings[g].values[i]))
          it->second.degree_consistent = false;
    }
  };

  seen.insert(detail::cluster_key(start));
  for (std::size_t i = 0; i < r; ++i) record(start, i);
  for (std::size_t i = r; i < seed.n; ++i) report.frozen.push_back(detail::describe(start, i, start.graded_seed.gradings));

  std::vector<ClusterState> frontier{start};
  report.closed = false;
  for (std::size_t depth = 1; depth <= depth_limit; ++depth) {
    auto candidates = detail::expand(frontier, r, options.threads);
    std::vector<ClusterState> next;
    for (std::size_t job = 0; job < candidates.size(); ++job) {
      auto& s = candidates[job];
      if (!seen.insert(detail::cluster_key(s)).second) continue;
      record(s, job % r);
      next.push_back(std::move(s));
    }
    frontier = std::move(next);
    if (frontier.empty()) {
      report.closed = true;
      break;
    }
  }
  report.clusters_visited = seen.size();
  for (auto& [poly, v] : variables) report.variables.push_back(std::move(v));
  return report;
}

/// Sorted degrees of the mutable variables for one grading.
inline std::vector<FgAbelianGroup::Element> degree_report(const ExplorationReport& report, std::size_t grading) {
  if (grading >= report.groups.size())
    fail(ErrorKind::UnknownGrading, "grading index " + std::to_string(grading) + " not in report");
  std::vector<FgAbelianGroup::Element> out;
  for (const auto& v : report.variables) out.push_back(v.degrees[grading]);
  std::sort(out.begin(), out.end());
  return out;
}

struct BalanceVerdict {
  enum class Status { Balanced, Unbalanced, Inconclusive };
  Status status = Status::Inconclusive;
  std::optional<FgAbelianGroup::Element> witness;  ///< a degree d with #d != #(-d)
  std::size_t count_degree = 0;
  std::size_t count_negative = 0;
  std::optional<bool> all_positive;  ///< set for Z-gradings
};

inline std::string to_string(BalanceVerdict::Status s) {
  switch (s) {
    case BalanceVerdict::Status::Balanced: return "balanced";
    case BalanceVerdict::Status::Unbalanced: return "unbalanced";
    case BalanceVerdict::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// Compares multiplicities of d and -d. Only a closed exploration can
/// produce a Balanced or Unbalanced verdict.
inline BalanceVerdict balanced_check(const ExplorationReport& report, std::size_t grading) {
  auto degrees = degree_report(report, grading);
  const FgAbelianGroup& group = report.groups[grading];
  std::map<FgAbelianGroup::Element, std::size_t> counts;
  for (const auto& d : degrees) ++counts[group.reduce(d)];
  BalanceVerdict verdict;
  if (group.size() == 1 && group.factors()[0] == 0)
    verdict.all_positive = std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d[0] > 0; });
  for (const auto& [d, c] : counts) {
    auto neg = group.negate(d);
    auto it = counts.find(neg);
    std::size_t cn = it == counts.end() ? 0 : it->second;
    if (c != cn) {
      verdict.witness = d;
      verdict.count_degree = c;
      verdict.count_negative = cn;
      break;
    }
  }
  if (!report.closed) verdict.status = BalanceVerdict::Status::Inconclusive;
  else verdict.status = verdict.witness ? BalanceVerdict::Status::Unbalanced : BalanceVerdict::Status::Balanced;
  return verdict;
}

}  // namespace gradalg
