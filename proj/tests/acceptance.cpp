// Runs the seven acceptance suites, printing one PASS/FAIL line each with its
// runtime against the budget. Exit status is nonzero if any suite fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gradalg/gradalg.hpp"
#include "oracles.hpp"

using namespace gradalg;

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

IntVector ints(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

FgAbelianGroup oracle_cokernel(const IntMatrix& b) {
  auto f = oracle::invariant_factors_by_minors(b);
  f.resize(b.rows(), Integer(0));
  return FgAbelianGroup::from_cyclic_orders(f);
}

void markov_suite() {
  GradedSeed gs = markov_seed();
  const Grading& g = gs.gradings.at(0);
  require(g.values == std::vector<IntVector>{ints({1}), ints({1}), ints({1})}, "grading is not (1,1,1)");
  IntVector bt = gs.seed.B.transpose() * ints({1, 1, 1});
  require(bt == ints({0, 0, 0}), "B^t G is not zero");
  require(is_grading(gs.seed, g), "grading rejected");

  auto report = explore(initial_state(gs), 6, {4});
  require(!report.variables.empty(), "no variables");
  require(report.all_homogeneous(), "a variable is not homogeneous");
  for (const auto& v : report.variables) {
    auto d = degree_of(v.poly, g);
    require(is_homogeneous(d), "degree_of reports a mixed variable");
    require(std::get<FgAbelianGroup::Element>(d)[0] >= 1, "degree below 1: " + v.poly.serialize());
    require(v.degrees.at(0)[0] >= 1, "seed-side degree below 1");
  }
  // Every mutation fixes the grading, so any path does too.
  std::mt19937 rng(5);
  GradedSeed cur = gs;
  for (int step = 0; step < 200; ++step) {
    for (std::size_t k = 0; k < 3; ++k)
      require(mutate_grading(cur.seed, cur.gradings[0], k).values == g.values, "mutation moved the grading");
    cur = mutate_graded_seed(cur, rng() % 3);
  }
}

void k0_suite() {
  struct Case {
    GradedSeed gs;
    std::string expected;
  };
  for (const auto& c : {Case{markov_seed(), "Z x Z/2 x Z/2"}, Case{a2_model(), "0"}, Case{a3_model(), "Z"}}) {
    auto k0 = presentation_from_exchange_matrix(c.gs.seed).invariants;
    require(k0.to_string() == c.expected, "K0 is " + k0.to_string() + ", expected " + c.expected);
    require(k0.isomorphic_to(oracle_cokernel(c.gs.seed.B)), "K0 disagrees with the minors oracle");
    for (const auto& a : {FgAbelianGroup::free(1), FgAbelianGroup::cyclic(2)}) {
      auto space = grading_space(c.gs.seed, a);
      require(space.concrete.structure.isomorphic_to(space.abstract), "grading space differs from Hom(K0, A)");
      require(space.abstract.isomorphic_to(hom_group(oracle_cokernel(c.gs.seed.B), a)), "Hom(K0, A) mismatch");
    }
    auto z2 = grading_space(c.gs.seed, FgAbelianGroup::cyclic(2)).abstract;
    std::size_t size = 1;
    for (const auto& f : z2.factors()) size *= f.get_ui();
    require(size == oracle::count_gradings_mod(c.gs.seed.B, 2), "Z/2 gradings miscounted");
  }
  require(grading_space(markov_seed().seed, FgAbelianGroup::free(1)).abstract.to_string() == "Z", "Markov over Z");
  require(grading_space(markov_seed().seed, FgAbelianGroup::cyclic(2)).abstract.to_string() == "Z/2 x Z/2 x Z/2",
          "Markov over Z/2");
}

void finite_type_suite() {
  auto a2 = explore(initial_state(a2_model()), 12);
  require(a2.closed && a2.variables.size() == 5, "A2 does not close with 5 variables");
  GradedSeed a3 = a3_model();
  require(a3.gradings.at(0).values == std::vector<IntVector>{ints({1}), ints({0}), ints({1})},
          "A3 standard grading is not (1,0,1)");
  auto r = explore(initial_state(a3), 12);
  require(r.closed && r.variables.size() == 9, "A3 does not close with 9 variables");
  std::multiset<Integer> ms, neg;
  for (const auto& v : r.variables) {
    auto d = degree_of(v.poly, a3.gradings[0]);
    require(is_homogeneous(d), "A3 variable not homogeneous");
    Integer x = std::get<FgAbelianGroup::Element>(d)[0];
    ms.insert(x);
    neg.insert(-x);
  }
  require(ms == neg, "A3 degree multiset is not symmetric");
  require(balanced_check(r, 0).status == BalanceVerdict::Status::Balanced, "verdict is not Balanced");
}

void birs_suite() {
  auto d = dynkin_diagram('A', 5);
  const std::vector<std::size_t> word{2, 1, 0, 3, 2, 1, 4, 3, 2};
  auto alg = build_preprojective(d);
  auto m = birs_modules(alg, word);
  const std::vector<IntVector> expected{ints({0, 0, 1, 0, 0}), ints({0, 0, 1, 1, 0}), ints({0, 0, 1, 1, 1}),
                                        ints({0, 1, 1, 0, 0}), ints({0, 1, 2, 1, 0}), ints({0, 1, 2, 2, 1}),
                                        ints({1, 1, 1, 0, 0}), ints({1, 2, 2, 1, 0}), ints({1, 2, 3, 2, 1})};
  require(m.n() == 9, "expected nine summands");
  for (std::size_t k = 0; k < 9; ++k) {
    require(m.dim_vectors.row(k) == expected[k], "dim V" + std::to_string(k + 1) + " differs");
    require(weyl_dimension_vector(d, word, k) == m.dim_vectors.row(k), "Weyl vector differs at V" + std::to_string(k + 1));
    require(satisfies_preprojective_relations(m.modules[k], alg), "V" + std::to_string(k + 1) + " breaks relations");
  }
  require(m.proj_indices.size() == 5 && m.r() == 4, "|I| or r wrong");
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) require(m.L(i, j) == -m.L(j, i), "L not antisymmetric");
  for (std::size_t kk = 0; kk < m.r(); ++kk)
    for (std::size_t j = 0; j < 9; ++j) {
      Integer s = 0;
      for (std::size_t l = 0; l < 9; ++l) s += m.Bq(l, kk) * m.L(l, j);
      require(s == (j == m.mutable_indices[kk] ? 2 : 0), "BL identity fails");
    }
  require(rank(m.Bq) == 4, "rank of B is not 4");
  IntMatrix prod = m.Bq.transpose() * m.dim_vectors;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) require(prod(i, j) == 0, "B^t dim is not zero");
  require(m.mutable_indices[0] == 0, "V1 is not mutable");
  IntVector in(5), out(5);
  for (std::size_t l = 0; l < 9; ++l) {
    const Integer b = m.Bq(l, 0);
    for (std::size_t c = 0; c < 5; ++c) {
      if (b < 0) in[c] += -b * m.dim_vectors(l, c);  // arrow V_l -> V_1
      if (b > 0) out[c] += b * m.dim_vectors(l, c);  // arrow V_1 -> V_l
    }
  }
  require(in == ints({0, 1, 2, 1, 0}) && out == in, "V1 arrow sums differ from (0,1,2,1,0)");
}

void degree_suite() {
  auto alg = build_preprojective(dynkin_diagram('A', 5));
  auto m = birs_modules(alg, {2, 1, 0, 3, 2, 1, 4, 3, 2});
  auto gradings = dimension_gradings(m);
  for (std::size_t k = 0; k < m.n(); ++k) {
    IntVector e(m.n());
    e[k] = 1;
    require(index_and_degree(m, m.modules[k], {}).index == e, "index of V" + std::to_string(k + 1) + " is not e_k");
  }
  for (auto k : m.mutable_indices) {
    auto seq = exchange_sequence(m, k);
    auto idx = index_and_degree(m, seq.mutated, gradings);
    for (std::size_t gi = 0; gi < gradings.size(); ++gi) {
      const Grading& g = gradings[gi];
      IntVector mid(1);
      for (std::size_t j = 0; j < m.n(); ++j) mid[0] += static_cast<unsigned long>(seq.middle[j]) * g.values[j][0];
      require(idx.degrees[gi][0] == mid[0] - g.values[k][0], "degree not additive at V" + std::to_string(k + 1));
      require(idx.degrees[gi][0] == static_cast<unsigned long>(seq.mutated.dims[gi]), "degree is not dimension");
    }
  }
  std::mt19937_64 rng(2024);
  for (auto p : m.proj_indices) {
    Grading g = projective_grading(m, p);
    for (int s = 0; s < 10; ++s) {
      QuiverRep x = sample_fac_module(m, rng);
      auto idx = index_and_degree(m, x, {g});
      require(idx.degrees[0][0] == static_cast<unsigned long>(hom_dim(x, m.modules[p])),
              "deg_[FV] differs from dim Hom(X, V" + std::to_string(p + 1) + ")");
    }
  }
}

void laurent_suite() {
  std::vector<GradedSeed> models{markov_seed(), a2_model(), a3_model(), grassmannian_seed(2, 4),
                                 grassmannian_seed(2, 5), grassmannian_seed(3, 6)};
  std::mt19937 rng(99);
  for (int t = 0; t < 1000; ++t) {
    const GradedSeed& gs = models[t % models.size()];
    ClusterState s = initial_state(gs);
    const std::size_t len = 1 + rng() % 8;
    for (std::size_t i = 0; i < len; ++i) {
      try {
        s = mutate_cluster(s, rng() % gs.seed.r);
      } catch (const Error& e) {
        require(e.kind() != ErrorKind::InexactDivision, "exact division failed");
        throw;
      }
    }
    for (std::size_t i = 0; i < s.cluster.size(); ++i)
      for (const auto& g : gs.gradings) require(is_homogeneous(degree_of(s.cluster[i], g)), "inhomogeneous variable");
  }
  for (const auto& gs : models)
    for (std::size_t i = 0; i < gs.seed.n; ++i) {
      IntVector e(gs.seed.n);
      e[i] = 1;
      require(evaluate_cluster_character(e, gs.seed.B, {{IntVector(gs.seed.r), 1}}) ==
                  LaurentPoly::variable(gs.seed.n, i),
              "character of e_i is not x_i");
    }
  // (1 + x2)/x1 from index (-1, 1), data {0: 1, 1: 1}, B column (0, -1).
  GradedSeed a2 = a2_model();
  LaurentPoly expected = mutate_cluster(initial_state(a2), 0).cluster[0];
  require(expected == (LaurentPoly::constant(2, 1) + LaurentPoly::variable(2, 1)).exact_divide(LaurentPoly::variable(2, 0)),
          "A2 mutation is not (1+x2)/x1");
  IntMatrix col(2, 1);
  col(0, 0) = a2.seed.B(0, 0);
  col(1, 0) = a2.seed.B(1, 0);
  require(col(1, 0) == -1, "unexpected A2 orientation");
  require(evaluate_cluster_character(ints({-1, 1}), col, {{ints({0}), 1}, {ints({1}), 1}}) == expected,
          "character of the A2 variable differs");
  Quiver point{1, {}};
  QuiverRep k2{point, {2}, {}};
  for (const auto& primes : std::vector<std::vector<std::int64_t>>{{}, {2, 3, 5}, {7, 11, 13}, {3, 5, 7, 11}, {13, 2, 17}}) {
    auto r = quiver_grassmannian_euler(k2, {1}, primes);
    require(r.chi == 2, "chi(Gr_1(k^2)) is not 2");
  }
}

void grassmannian_suite() {
  for (auto n : {4u, 5u}) {
    GradedSeed gs = grassmannian_seed(2, n);
    require(!validate(gs).has_value(), "Gr(2," + std::to_string(n) + ") fails validation");
    require(gs.gradings.size() == 2, "expected Plucker and content gradings");
    for (const auto& g : gs.gradings) require(is_grading(gs.seed, g), "grading rejected");
    GrassmannianLattice lat(n, 2);
    for (std::size_t i = 0; i < gs.seed.n; ++i) {
      const IntVector& c = gs.gradings[1].values[i];
      require(lat.contains(c), "content not in Z^n(k)");
      require(lat.delta(c) == gs.gradings[0].values[i][0], "delta differs from Plucker degree");
      require(lat.from_basis(lat.to_basis(c)) == c, "lattice round trip fails");
    }
  }
  GradedSeed gs = grassmannian_seed(2, 5);
  auto r = explore(initial_state(gs), 12);
  require(r.closed && r.variables.size() == 5, "Gr(2,5) does not close with 5 variables");
  GrassmannianLattice lat(5, 2);
  for (const auto& v : r.variables) {
    auto pl = degree_of(v.poly, gs.gradings[0]);
    auto ct = degree_of(v.poly, gs.gradings[1]);
    require(is_homogeneous(pl) && is_homogeneous(ct), "inhomogeneous Gr(2,5) variable");
    require(std::get<FgAbelianGroup::Element>(pl) == ints({1}), "Plucker degree is not 1");
    const IntVector c = std::get<FgAbelianGroup::Element>(ct);
    require(lat.delta(c) == 1 && lat.from_basis(lat.to_basis(c)) == c, "content degree round trip fails");
  }
}

}  // namespace

int main() {
  struct Suite {
    const char* name;
    double budget;
    std::function<void()> run;
  };
  const std::vector<Suite> suites{{"markov", 10, markov_suite},
                                  {"k0", 1, k0_suite},
                                  {"finite_type", 10, finite_type_suite},
                                  {"birs_a5", 120, birs_suite},
                                  {"categorical_degree", 60, degree_suite},
                                  {"laurent_character", 30, laurent_suite},
                                  {"grassmannian", 10, grassmannian_suite}};
  int failed = 0;
  for (const auto& s : suites) {
    std::string detail;
    bool ok = true;
    auto start = std::chrono::steady_clock::now();
    try {
      s.run();
    } catch (const Failure& f) {
      ok = false, detail = f.what;
    } catch (const std::exception& e) {
      ok = false, detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs >= s.budget) ok = false, detail = "over budget";
    char line[256];
    std::snprintf(line, sizeof line, "%s %s %.3fs (budget %.0fs)", ok ? "PASS" : "FAIL", s.name, secs, s.budget);
    std::cout << line << (detail.empty() ? "" : " " + detail) << "\n";
    failed += !ok;
  }
  return failed ? 1 : 0;
}
