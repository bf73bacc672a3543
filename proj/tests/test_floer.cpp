#include <gtest/gtest.h>

#include <algorithm>

#include "cfk/diagram.hpp"
#include "cfk/floer.hpp"
#include "shipped.hpp"

using namespace cfk;
using cfk::testing::canonical;
using cfk::testing::dataComplex;

namespace {

bool hasBigon(const std::vector<Bigon>& bigons, const std::string& from, const std::string& to, int w, int z) {
  return std::any_of(bigons.begin(), bigons.end(), [&](const Bigon& b) {
    return b.fromGen() == from && b.toGen() == to && b.wCount == w && b.zCount == z;
  });
}

std::string arrowText(const CfkComplex& c, const Arrow& a) {
  return c.generator(a.from).name + "->U" + std::to_string(a.upower) + c.generator(a.to).name;
}

}  // namespace

TEST(Bigons, TenOneSixtyOneContainsBothCaptionBigons) {
  const auto bigons = enumerate_bigons(build_diagram({6, 4, -3, 1}));
  EXPECT_TRUE(hasBigon(bigons, "x4", "x3", 1, 0));
  EXPECT_TRUE(hasBigon(bigons, "x-5", "x-3", 2, 0));
}

TEST(Bigons, TrefoilGivesExactlyDbEqualsUaPlusC) {
  const auto d = build_diagram({1, 1, 1, 0});
  const auto bigons = enumerate_bigons(d);
  ASSERT_EQ(bigons.size(), 2u);
  const auto c = assemble_cfk(d, bigons);
  // a, b, c are the generators at Alexander 1, 0, -1.
  ASSERT_EQ(c.arrows().size(), 2u);
  std::vector<std::string> arrows;
  for (const auto& a : c.arrows()) arrows.push_back(arrowText(c, a));
  std::sort(arrows.begin(), arrows.end());
  EXPECT_EQ(arrows, (std::vector<std::string>{"x0->U0x1", "x0->U1x-1"}));
  EXPECT_EQ(c.generator(c.indexOf("x-1")).alexander, 1);
  EXPECT_EQ(c.generator(c.indexOf("x1")).alexander, -1);
}

TEST(Bigons, NoDuplicatesAndSorted) {
  const auto d = build_diagram({14, 7, -7, 1});
  const auto bigons = enumerate_bigons(d);
  // Sorted by beta position of the corners.
  auto key = [&](const Bigon& b) { return std::make_pair(d.position(b.fromLabel), d.position(b.toLabel)); };
  for (std::size_t i = 1; i < bigons.size(); ++i) {
    EXPECT_FALSE(bigons[i] == bigons[i - 1]);
    EXPECT_LE(key(bigons[i - 1]), key(bigons[i]));
  }
}

TEST(Bigons, IndependentOfReferenceLine) {
  for (const Parameterization p : {Parameterization{6, 4, -3, 1}, Parameterization{7, 3, -3, 4},
                                   Parameterization{11, 5, -5, 7}}) {
    const auto d = build_diagram(p);
    const auto base = enumerate_bigons(d, 0);
    EXPECT_EQ(enumerate_bigons(d, 1), base) << to_string(p);
    EXPECT_EQ(enumerate_bigons(d, -3), base) << to_string(p);
    EXPECT_EQ(enumerate_bigons(d, 17), base) << to_string(p);
  }
}

TEST(Bigons, OneCrossingPerPointOnEachLine) {
  const auto d = build_diagram({9, 6, 2, 6});
  for (std::int64_t line : {0, 2, -5}) EXPECT_EQ(lineCrossings(d, line).size(), 19u);
}

TEST(Bigons, ArrowsFollowTheGradingRule) {
  for (const Parameterization p : {Parameterization{6, 4, -3, 1}, Parameterization{14, 7, -7, 1}}) {
    const auto d = build_diagram(p);
    const auto bigons = enumerate_bigons(d);
    const auto c = assemble_cfk(d, bigons);
    for (const auto& b : bigons) {
      const auto& from = c.generator(c.indexOf(b.fromGen()));
      const auto& to = c.generator(c.indexOf(b.toGen()));
      EXPECT_EQ(from.maslov - to.maslov, 1 - 2 * b.wCount);
      EXPECT_EQ(from.alexander - to.alexander, b.zCount - b.wCount);
    }
  }
}

TEST(Assemble, TrefoilGradings) {
  const auto c = complexFromParameterization({1, 1, 1, 0});
  // a = x-1, b = x0, c = x1
  const auto& a = c.generator(c.indexOf("x-1"));
  const auto& b = c.generator(c.indexOf("x0"));
  const auto& cc = c.generator(c.indexOf("x1"));
  EXPECT_EQ(std::make_tuple(a.alexander, b.alexander, cc.alexander), std::make_tuple(1, 0, -1));
  EXPECT_EQ(std::make_tuple(a.maslov, b.maslov, cc.maslov), std::make_tuple(0, -1, -2));
}

TEST(Assemble, TrefoilMatchesShippedFile) {
  const auto c = complexFromParameterization({1, 1, 1, 0});
  const auto f = dataComplex("complexes/trefoil.json");
  EXPECT_EQ(canonical(renamed(c, {"b", "c", "a"})), canonical(f));
}

TEST(Assemble, FigureEightGradings) {
  const auto c = complexFromParameterization({2, 2, -2, 0});
  ASSERT_EQ(c.size(), 5u);
  std::vector<int> m;
  for (const auto& g : c.generators()) m.push_back(g.maslov);
  std::sort(m.begin(), m.end());
  EXPECT_EQ(m, (std::vector<int>{-1, 0, 0, 0, 1}));
  // Sum of (-1)^M t^A; t^-1 - 3 + t up to the overall sign.
  EXPECT_EQ(formatLaurent(alexander_polynomial(c)), "-t^-1 + 3 - t");
}

TEST(Assemble, TenOneSixtyOneMatchesFigureComplex) {
  const auto c = complexFromParameterization({6, 4, -3, 1});
  EXPECT_EQ(c.size(), 13u);
  EXPECT_EQ(c.arrows().size(), 18u);
  EXPECT_EQ(canonical(c), canonical(dataComplex("complexes/10_161_diagram.json")));
}

TEST(Assemble, TableDiagramsVerify) {
  for (const auto& e : cfk::testing::knotTable().entries()) {
    if (!e.fromDiagram()) continue;
    const auto c = complexFromParameterization(std::get<Parameterization>(e.source));
    EXPECT_TRUE(verify_complex(c).ok()) << e.name;
    const auto delta = alexander_polynomial(c);
    EXPECT_TRUE(isSymmetric(delta)) << e.name;
    EXPECT_EQ(std::abs(evaluateAtOne(delta)), 1) << e.name;
  }
}

TEST(Assemble, RelativeGradingsAreConsistent) {
  const auto d = build_diagram({7, 3, -3, 4});
  const auto c = complexFromParameterization({7, 3, -3, 4});
  for (int x : d.points)
    for (int y : d.points) {
      const auto g = relativeGrading(d, x, y);
      const auto& gx = c.generator(c.indexOf(generatorName(x)));
      const auto& gy = c.generator(c.indexOf(generatorName(y)));
      EXPECT_EQ(g.maslov, gx.maslov - gy.maslov);
      EXPECT_EQ(g.alexander, gx.alexander - gy.alexander);
    }
}

TEST(Assemble, VerticalHomologyInGradingZero) {
  for (const Parameterization p : {Parameterization{6, 4, -3, 1}, Parameterization{14, 7, -7, 1}}) {
    const auto c = complexFromParameterization(p);
    EXPECT_EQ(verticalHomology(c), (std::map<int, int>{{0, 1}}));
  }
}
