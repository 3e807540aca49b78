#include <gtest/gtest.h>

#include "gradalg/preprojective.hpp"

using namespace gradalg;

namespace {

std::vector<std::size_t> dims(const QuiverRep& m) { return m.dims; }

// dim e_i Pi e_j for A_n, from the known formula min(i, j, n+1-i, n+1-j).
std::size_t a_block(std::size_t n, std::size_t i, std::size_t j) {
  return std::min({i, j, n + 1 - i, n + 1 - j});
}

}  // namespace

TEST(Preprojective, DimensionsTypeA) {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto alg = build_preprojective(dynkin_diagram('A', n));
    EXPECT_EQ(alg.dimension(), n * (n + 1) * (n + 2) / 6) << n;
  }
}

TEST(Preprojective, DimensionsTypesDE) {
  EXPECT_EQ(build_preprojective(dynkin_diagram('D', 4)).dimension(), 28u);
  EXPECT_EQ(build_preprojective(dynkin_diagram('D', 5)).dimension(), 60u);
  EXPECT_EQ(build_preprojective(dynkin_diagram('E', 6)).dimension(), 156u);
  EXPECT_EQ(build_preprojective(dynkin_diagram('E', 7)).dimension(), 399u);
  EXPECT_EQ(build_preprojective(dynkin_diagram('E', 8)).dimension(), 1240u);
}

TEST(Preprojective, RelationsVanish) {
  auto alg = build_preprojective(dynkin_diagram('D', 5));
  for (std::size_t v = 0; v < 5; ++v) {
    // rho_v reduced as a sum of two-arrow paths is zero.
    Combination total;
    for (const auto& [coef, pair] : alg.relation(v)) {
      Path p{v, {pair.first, pair.second}};
      for (const auto& [b, x] : alg.reduce(p)) total[b] += coef * x;
    }
    std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
    EXPECT_TRUE(total.empty()) << v;
  }
}

TEST(Preprojective, MultiplicationIsAssociative) {
  auto alg = build_preprojective(dynkin_diagram('A', 4));
  // Compare (p q) r with p (q r) on all degree-1 triples.
  const auto& b1 = alg.basis(1);
  for (std::size_t i = 0; i < b1.size(); ++i)
    for (std::size_t j = 0; j < b1.size(); ++j)
      for (std::size_t k = 0; k < b1.size(); ++k) {
        auto pq = alg.multiply(1, i, 1, j);
        Combination left, right;
        for (const auto& [b, c] : pq)
          for (const auto& [b2, c2] : alg.multiply(2, b, 1, k)) left[b2] += c * c2;
        for (const auto& [b, c] : alg.multiply(1, j, 1, k))
          for (const auto& [b2, c2] : alg.multiply(1, i, 2, b)) right[b2] += c * c2;
        std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
        EXPECT_EQ(left, right);
      }
}

TEST(Preprojective, NotDynkin) {
  EXPECT_THROW(dynkin_diagram('E', 9), Error);
  EXPECT_THROW(dynkin_diagram('D', 3), Error);
}

TEST(Injective, A2) {
  auto alg = build_preprojective(dynkin_diagram('A', 2));
  auto i1 = injective_module(alg, 0);
  EXPECT_EQ(dims(i1), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(socle_dims(i1), (std::vector<std::size_t>{1, 0}));
  EXPECT_TRUE(satisfies_preprojective_relations(i1, alg));
}

TEST(Injective, TypeABlocks) {
  const std::size_t n = 5;
  auto alg = build_preprojective(dynkin_diagram('A', n));
  for (std::size_t i = 0; i < n; ++i) {
    auto m = injective_module(alg, i);
    check_rep(m);
    EXPECT_TRUE(satisfies_preprojective_relations(m, alg));
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(m.dims[j], a_block(n, i + 1, j + 1));
    std::vector<std::size_t> simple(n, 0);
    simple[i] = 1;
    EXPECT_EQ(socle_dims(m), simple);
    // Injective with simple socle: End is the local algebra e_i Pi e_i.
    EXPECT_EQ(hom_dim(m, m), a_block(n, i + 1, i + 1));
  }
}

TEST(Injective, SocleSequences) {
  auto alg = build_preprojective(dynkin_diagram('A', 5));
  auto i3 = injective_module(alg, 2);
  EXPECT_EQ(dims(i3), (std::vector<std::size_t>{1, 2, 3, 2, 1}));
  EXPECT_EQ(socle_sequence_submodule(i3, {2}).rep.dims, (std::vector<std::size_t>{0, 0, 1, 0, 0}));
  EXPECT_TRUE(socle_sequence_submodule(i3, {0}).rep.is_zero());
  auto i4 = injective_module(alg, 3);
  EXPECT_EQ(socle_sequence_submodule(i4, {3, 2}).rep.dims, (std::vector<std::size_t>{0, 0, 1, 1, 0}));
  // Applying every letter often enough recovers the whole module.
  std::vector<std::size_t> all;
  for (int rep = 0; rep < 5; ++rep)
    for (std::size_t v = 0; v < 5; ++v) all.push_back(v);
  auto full = socle_sequence_submodule(i3, all);
  EXPECT_EQ(full.rep.dims, i3.dims);
  EXPECT_TRUE(is_morphism(full.rep, i3, full.inclusion));
}

TEST(Injective, InjectiveDimensionsTypeE6) {
  auto alg = build_preprojective(dynkin_diagram('E', 6));
  std::size_t total = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    auto m = injective_module(alg, i);
    EXPECT_TRUE(satisfies_preprojective_relations(m, alg));
    total += m.total_dim();
  }
  EXPECT_EQ(total, alg.dimension());
}
