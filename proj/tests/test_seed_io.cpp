#include <gtest/gtest.h>

#include <string>

#include "gradalg/models.hpp"
#include "gradalg/seed_io.hpp"

using namespace gradalg;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_seed(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST(SeedIo, RoundTripsBundledModels) {
  std::vector<GradedSeed> seeds{markov_seed(), a2_model(), a3_model(), grassmannian_seed(2, 4),
                                grassmannian_seed(2, 5), grassmannian_seed(3, 6),
                                standard_gradings(dynkin_seed('D', 4, Orientation::Alternating)),
                                standard_gradings(dynkin_seed('E', 6))};
  for (const auto& gs : seeds) {
    const std::string text = serialize_seed(gs);
    GradedSeed back = parse_seed(text);
    EXPECT_EQ(serialize_seed(back), text);
    EXPECT_EQ(back.seed.names, gs.seed.names);
    ASSERT_EQ(back.gradings.size(), gs.gradings.size());
  }
}

TEST(SeedIo, FieldOrderIsFixed) {
  EXPECT_EQ(serialize_seed(markov_seed()),
            R"({"n":3,"r":3,"B":[[0,2,-2],[-2,0,2],[2,-2,0]],"names":["x1","x2","x3"],)"
            R"("gradings":[{"factors":[0],"vectors":[[1],[1],[1]]}]})");
}

TEST(SeedIo, NamesDefaultAndTrivialFactorsDrop) {
  GradedSeed gs = parse_seed(R"({"n":2,"r":1,"B":[[0],[-1]],"gradings":[{"factors":[1,0],"vectors":[[5,0],[9,0]]}]})");
  EXPECT_EQ(gs.seed.names, default_names(2));
  ASSERT_EQ(gs.gradings.size(), 1u);
  EXPECT_EQ(gs.gradings[0].group.factors(), IntVector({0}));
  EXPECT_EQ(gs.gradings[0].values[0], IntVector({0}));
}

TEST(SeedIo, TorsionValuesAreReduced) {
  GradedSeed gs = parse_seed(R"({"n":3,"r":3,"B":[[0,2,-2],[-2,0,2],[2,-2,0]],)"
                             R"("gradings":[{"factors":[2],"vectors":[[3],[1],[-1]]}]})");
  for (const auto& v : gs.gradings[0].values) EXPECT_EQ(v, IntVector({1}));
}

TEST(SeedIo, Errors) {
  EXPECT_EQ(kind_of("{"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("[]"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"r":1,"B":[[0]]})"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"n":1,"r":2,"B":[[0,0]]})"), ErrorKind::BadShape);
  EXPECT_EQ(kind_of(R"({"n":2,"r":1,"B":[[0]]})"), ErrorKind::BadShape);
  EXPECT_EQ(kind_of(R"({"n":2,"r":1,"B":[[0],[1.5]]})"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"n":2,"r":1,"B":[[0],[99999999999999999999999]]})"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(R"({"n":2,"r":2,"B":[[0,1],[1,0]]})"), ErrorKind::NonSkewSymmetrizable);
  EXPECT_EQ(kind_of(R"({"n":2,"r":1,"B":[[0],[1]],"names":["a"]})"), ErrorKind::BadShape);
  EXPECT_EQ(kind_of(R"({"n":2,"r":1,"B":[[0],[1]],"gradings":[{"factors":[0],"vectors":[[1],[1]]}]})"),
            ErrorKind::InvalidGrading);
  EXPECT_EQ(kind_of(R"({"n":2,"r":1,"B":[[0],[1]],"gradings":[{"factors":[0],"vectors":[[1]]}]})"),
            ErrorKind::BadShape);
  EXPECT_EQ(kind_of(R"({"n":-1,"r":0,"B":[]})"), ErrorKind::BadShape);
}
