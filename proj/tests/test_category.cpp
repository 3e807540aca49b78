#include <gtest/gtest.h>

#include <random>

#include "gradalg/category.hpp"
#include "gradalg/weyl.hpp"
#include "oracles.hpp"

using namespace gradalg;

namespace {

std::vector<std::size_t> zero_based(std::vector<std::size_t> w) {
  for (auto& x : w) --x;
  return w;
}

const std::vector<std::size_t>& a5_word() {
  static const auto w = zero_based({3, 2, 1, 4, 3, 2, 5, 4, 3});
  return w;
}

struct A5Fixture : ::testing::Test {
  static void SetUpTestSuite() {
    alg = new PreprojectiveAlgebra(build_preprojective(dynkin_diagram('A', 5)));
    model = new CategoryModel(birs_modules(*alg, a5_word()));
  }
  static void TearDownTestSuite() {
    delete model;
    delete alg;
  }
  static PreprojectiveAlgebra* alg;
  static CategoryModel* model;
};
PreprojectiveAlgebra* A5Fixture::alg = nullptr;
CategoryModel* A5Fixture::model = nullptr;

IntVector iv(std::vector<long> v) { return IntVector(v.begin(), v.end()); }

}  // namespace

TEST(Weyl, Reducedness) {
  auto a3 = dynkin_diagram('A', 3);
  EXPECT_TRUE(is_reduced(a3, zero_based({1, 2, 1, 3, 2, 1})));
  EXPECT_FALSE(is_reduced(a3, zero_based({1, 1})));
  EXPECT_FALSE(is_reduced(a3, zero_based({1, 2, 1, 2})));
  EXPECT_TRUE(is_reduced(a3, zero_based({1, 3})));
  EXPECT_TRUE(is_reduced(dynkin_diagram('A', 5), a5_word()));
  EXPECT_THROW(is_reduced(a3, {3}), Error);
}

TEST(Weyl, LongestWordLengthMatchesPositiveRoots) {
  // Greedily extending a word while it stays reduced stops exactly at the
  // number of positive roots.
  for (auto [t, m] : std::vector<std::pair<char, std::size_t>>{{'A', 3}, {'A', 4}, {'D', 4}, {'E', 6}}) {
    auto d = dynkin_diagram(t, m);
    std::vector<std::size_t> word;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t l = 0; l < m; ++l) {
        auto w = word;
        w.insert(w.begin(), l);
        if (is_reduced(d, w)) {
          word = w;
          grew = true;
          break;
        }
      }
    }
    EXPECT_EQ(word.size(), oracle::positive_root_count(d.cartan())) << d.name();
  }
}

TEST(Weyl, DimensionVectorsA5) {
  auto d = dynkin_diagram('A', 5);
  EXPECT_EQ(weyl_dimension_vector(d, a5_word(), 0), iv({0, 0, 1, 0, 0}));
  EXPECT_EQ(weyl_dimension_vector(d, a5_word(), 1), iv({0, 0, 1, 1, 0}));
  EXPECT_EQ(weyl_dimension_vector(d, a5_word(), 8), iv({1, 2, 3, 2, 1}));
  EXPECT_THROW(weyl_dimension_vector(d, a5_word(), 9), Error);
}

TEST(Weyl, FundamentalWeightRootCoordinatesNeedDenominators) {
  // omega_1 of A2 is (2/3, 1/3) in root coordinates.
  EXPECT_THROW(weight_to_roots(dynkin_diagram('A', 2), iv({1, 0})), Error);
  EXPECT_EQ(weight_to_roots(dynkin_diagram('A', 2), iv({2, -1})), iv({1, 0}));
}

TEST_F(A5Fixture, DimensionVectorsMatchDiagrams) {
  const std::vector<std::vector<long>> expected{
      {0, 0, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 1, 1, 1}, {0, 1, 1, 0, 0}, {0, 1, 2, 1, 0},
      {0, 1, 2, 2, 1}, {1, 1, 1, 0, 0}, {1, 2, 2, 1, 0}, {1, 2, 3, 2, 1},
  };
  ASSERT_EQ(model->n(), 9u);
  for (std::size_t k = 0; k < 9; ++k) {
    EXPECT_EQ(model->dim_vectors.row(k), iv(expected[k])) << "V" << k + 1;
    EXPECT_EQ(weyl_dimension_vector(model->diagram, model->word, k), iv(expected[k]));
  }
}

TEST_F(A5Fixture, ProjectivesAndRank) {
  EXPECT_EQ(model->proj_indices, (std::vector<std::size_t>{2, 5, 6, 7, 8}));
  EXPECT_EQ(model->mutable_indices, (std::vector<std::size_t>{0, 1, 3, 4}));
  EXPECT_EQ(model->r(), 4u);
  EXPECT_EQ(rank(model->Bq), 4u);
}

TEST_F(A5Fixture, HomExamples) {
  const auto& v = model->modules;
  EXPECT_EQ(hom_dim(v[0], v[3]), 0u);
  EXPECT_EQ(hom_dim(v[3], v[0]), 1u);
  auto s3 = simple_rep(alg->quiver(), 2);
  EXPECT_EQ(hom_dim(s3, s3), 1u);
  auto vv = direct_sum({v[4], v[4]}, alg->quiver());
  EXPECT_EQ(hom_dim(v[4], vv), 2 * hom_dim(v[4], v[4]));
  EXPECT_THROW(hom_dim(v[0], simple_rep(build_preprojective(dynkin_diagram('A', 2)).quiver(), 0)), Error);
}

TEST_F(A5Fixture, QuiverAtV1) {
  // Arrows at V1: V1 -> V4, V1 -> V2 (irreducible maps V4 -> V1, V2 -> V1)
  // and V5 -> V1.
  IntVector col = model->B.col(0);
  EXPECT_EQ(col, iv({0, 1, 0, 1, -1, 0, 0, 0, 0}));
  IntVector in(5), out(5);
  for (std::size_t l = 0; l < 9; ++l)
    for (std::size_t v = 0; v < 5; ++v) {
      if (col[l] < 0) in[v] -= col[l] * model->dim_vectors(l, v);
      if (col[l] > 0) out[v] += col[l] * model->dim_vectors(l, v);
    }
  EXPECT_EQ(in, iv({0, 1, 2, 1, 0}));
  EXPECT_EQ(out, iv({0, 1, 2, 1, 0}));
}

TEST_F(A5Fixture, BLIdentityAndGrading) {
  for (std::size_t c = 0; c < model->r(); ++c)
    for (std::size_t j = 0; j < model->n(); ++j) {
      Integer s = 0;
      for (std::size_t l = 0; l < model->n(); ++l) s += model->Bq(l, c) * model->L(l, j);
      EXPECT_EQ(s, j == model->mutable_indices[c] ? 2 : 0);
    }
  auto gs = model_seed(*model);
  EXPECT_FALSE(validate(gs).has_value());
  EXPECT_EQ(gs.seed.names[0], "V1");
  EXPECT_EQ(gs.seed.names[4], "V3");
}

TEST_F(A5Fixture, AllChecksPass) {
  for (const auto& res : run_checks(*model, *alg)) EXPECT_TRUE(res.passed) << res.name << ": " << res.detail;
  EXPECT_THROW(run_checks(*model, *alg, {"nonsense"}), Error);
}

TEST_F(A5Fixture, IndexOfSumsAndSummands) {
  auto grads = dimension_gradings(*model);
  for (std::size_t k = 0; k < model->n(); ++k) {
    auto r = index_and_degree(*model, model->modules[k], grads);
    IntVector e(model->n());
    e[k] = 1;
    EXPECT_EQ(r.index, e);
    for (std::size_t v = 0; v < 5; ++v) EXPECT_EQ(r.degrees[v], IntVector{model->dim_vectors(k, v)});
  }
  auto sum = direct_sum({model->modules[1], model->modules[4]}, alg->quiver());
  auto r = index_and_degree(*model, sum, grads);
  EXPECT_EQ(r.index, iv({0, 1, 0, 0, 1, 0, 0, 0, 0}));
}

TEST_F(A5Fixture, ExchangeSequenceAtV1) {
  auto ex = exchange_sequence(*model, 0);
  // 0 -> V1* -> V2 + V4 -> V1 -> 0 with V1* = "2 over 3 over 4"; the other
  // sequence 0 -> V1 -> V5 -> V1* -> 0 has the same middle degree.
  EXPECT_EQ(ex.middle, (std::vector<std::size_t>{0, 1, 0, 1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(ex.mutated.dims, (std::vector<std::size_t>{0, 1, 1, 1, 0}));
  EXPECT_EQ(ext1_dim(model->diagram, ex.mutated, model->modules[0]), 1);
  auto grads = dimension_gradings(*model);
  auto star = index_and_degree(*model, ex.mutated, grads);
  for (std::size_t v = 0; v < 5; ++v) {
    EXPECT_EQ(star.degrees[v][0], model->dim_vectors(1, v) + model->dim_vectors(3, v) - model->dim_vectors(0, v));
    EXPECT_EQ(star.degrees[v][0], model->dim_vectors(4, v) - model->dim_vectors(0, v));
  }
  EXPECT_THROW(exchange_sequence(*model, 8), Error);
}

TEST_F(A5Fixture, SampledFacModules) {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 10; ++s) {
    QuiverRep x = sample_fac_module(*model, rng);
    EXPECT_TRUE(satisfies_preprojective_relations(x, *alg));
    std::vector<Grading> grads;
    for (auto p : model->proj_indices) grads.push_back(projective_grading(*model, p));
    auto r = index_and_degree(*model, x, grads);
    for (std::size_t q = 0; q < grads.size(); ++q)
      EXPECT_EQ(r.degrees[q][0], hom_dim(x, model->modules[model->proj_indices[q]]));
  }
}

TEST_F(A5Fixture, NotInFac) {
  // S_1 is not a quotient of any V_k: no V_k has top containing S_1.
  EXPECT_THROW(index_and_degree(*model, simple_rep(alg->quiver(), 0), {}), Error);
}

TEST_F(A5Fixture, ReportIsDeterministic) {
  auto a = model_report(*model);
  EXPECT_EQ(a, model_report(birs_modules(*alg, a5_word())));
  EXPECT_NE(a.find("type A5 word 3,2,1,4,3,2,5,4,3"), std::string::npos);
  EXPECT_NE(a.find("V9 1 2 3 2 1"), std::string::npos);
}

TEST(Birs, A2LongestWord) {
  auto alg = build_preprojective(dynkin_diagram('A', 2));
  auto m = birs_modules(alg, zero_based({1, 2, 1}));
  ASSERT_EQ(m.n(), 3u);
  EXPECT_EQ(m.dim_vectors.row(0), iv({1, 0}));
  EXPECT_EQ(m.dim_vectors.row(1), iv({1, 1}));
  EXPECT_EQ(m.dim_vectors.row(2), iv({1, 1}));
  EXPECT_EQ(m.proj_indices.size(), 2u);
  EXPECT_EQ(m.r(), 1u);
  for (const auto& res : run_checks(m, alg)) EXPECT_TRUE(res.passed) << res.name << ": " << res.detail;
  EXPECT_THROW(birs_modules(alg, zero_based({1, 1})), Error);
}

TEST(Birs, A3Words) {
  auto alg = build_preprojective(dynkin_diagram('A', 3));
  for (auto w : {zero_based({1, 2, 1, 3, 2, 1}), zero_based({2, 1, 3, 2}), zero_based({3, 2, 1, 3, 2, 3})}) {
    auto m = birs_modules(alg, w);
    for (std::size_t k = 0; k < m.n(); ++k) EXPECT_EQ(m.dim_vectors.row(k), weyl_dimension_vector(m.diagram, w, k));
    for (const auto& res : run_checks(m, alg)) EXPECT_TRUE(res.passed) << res.name << ": " << res.detail;
  }
}

TEST(Birs, D4LongestWordChecks) {
  auto d = dynkin_diagram('D', 4);
  auto alg = build_preprojective(d);
  // c^3 for the Coxeter element c = s_1 s_2 s_3 s_4 is a reduced word of w_0.
  auto w = zero_based({1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4});
  ASSERT_TRUE(is_reduced(d, w));
  auto m = birs_modules(alg, w);
  EXPECT_EQ(m.proj_indices.size(), 4u);
  for (const auto& res : run_checks(m, alg, {"weyl_dimension_vectors", "socles", "bl_identity", "rank",
                                             "dimension_grading", "crawley_boevey"}))
    EXPECT_TRUE(res.passed) << res.name << ": " << res.detail;
}

TEST(EndomorphismQuiver, IsomorphicSummandsRejected) {
  auto alg = build_preprojective(dynkin_diagram('A', 2));
  auto p = injective_module(alg, 0);
  EXPECT_THROW(endomorphism_quiver({p, p}), Error);
}
