#include <gtest/gtest.h>

#include "cfk/errors.hpp"
#include "cfk/involutive.hpp"
#include "cfk/pipeline.hpp"
#include "cfk/reduction.hpp"
#include "shipped.hpp"
#include "worked_maps.hpp"

using namespace cfk;
using cfk::testing::dataComplex;

namespace {

std::string support(const ConeComplex& cone, const HomogeneousElement& e) {
  std::string s;
  for (auto i : e.support.ones()) s += (s.empty() ? "" : "+") + cone.complex.names[i];
  return s;
}

std::size_t coneIndex(const ConeComplex& cone, const std::string& name) {
  for (std::size_t i = 0; i < cone.complex.size(); ++i)
    if (cone.complex.names[i] == name) return i;
  ADD_FAILURE() << "no cone generator " << name;
  return 0;
}

InvariantTriple triple(const CfkComplex& c) { return computeInvariants(reduce(c).first).values; }

}  // namespace

TEST(Cone, TrefoilConnectingArrow) {
  const auto c = dataComplex("complexes/trefoil.json");
  const auto s = solve_iota(c);
  ASSERT_EQ(s.validatedTotal, 1u);
  const auto cone = build_ai0_minus(c, s.validated.front());
  // d(c) = Q(Ua + c) in the cone.
  const auto from = coneIndex(cone, "c");
  EXPECT_TRUE(cone.complex.d.test(coneIndex(cone, "QUa"), from));
  EXPECT_TRUE(cone.complex.d.test(coneIndex(cone, "Qc"), from));
  EXPECT_EQ(cone.complex.d.column(from).count(), 2u);
}

TEST(Cone, GradingsAndQ) {
  const auto c = dataComplex("complexes/11n57.json");
  const auto cone = build_ai0_minus(c, cfk::testing::iota11n57(c));
  const auto a0 = build_a0_minus(c);
  ASSERT_EQ(cone.half, a0.size());
  for (std::size_t i = 0; i < cone.half; ++i) {
    EXPECT_EQ(cone.complex.maslov[i], a0.maslov[i] + 1);
    EXPECT_EQ(cone.complex.maslov[cone.half + i], a0.maslov[i]);
    EXPECT_TRUE(cone.q.test(cone.half + i, i));
  }
  EXPECT_TRUE(checkFreeComplex(cone.complex).ok());
  EXPECT_TRUE((cone.q * cone.q).isZero());
  EXPECT_EQ(cone.q * cone.complex.d, cone.complex.d * cone.q);
}

TEST(Cone, FigureEightConnectingMap) {
  const auto c = dataComplex("complexes/figure_eight.json");
  const auto cone = build_ai0_minus(c, cfk::testing::iotaFigureEight(c));
  // (iota + Id)(x) = e.
  const auto x = coneIndex(cone, "x");
  EXPECT_TRUE(cone.complex.d.test(coneIndex(cone, "Qe"), x));
  EXPECT_FALSE(cone.complex.d.test(coneIndex(cone, "Qx"), x));
}

TEST(Cone, UnknotIdentityTowers) {
  const auto c = dataComplex("complexes/unknot.json");
  const GradedMap id{gf2::BitMatrix::identity(1), 0, Filtration::SkewFiltered};
  const auto cone = build_ai0_minus(c, id);
  EXPECT_TRUE(cone.complex.d.isZero());
  const auto r = classifyTowers(cone);
  EXPECT_EQ(r.r1, 1);
  EXPECT_EQ(r.r2, 0);
  EXPECT_EQ(involutiveV0s(c, id), std::make_pair(0, 0));
}

TEST(Cone, NotA0Compatible) {
  const CfkComplex c({{"p", 0, 0}, {"q", 2, 0}}, {});
  auto m = gf2::BitMatrix::identity(2);
  m.set(1, 0);
  try {
    build_ai0_minus(c, GradedMap{m, 0, Filtration::SkewFiltered});
    FAIL() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IotaNotA0Compatible);
  }
}

TEST(Towers, TrefoilTops) {
  const auto c = dataComplex("complexes/trefoil.json");
  TowerReport r;
  EXPECT_EQ(involutiveV0s(c, solve_iota(c).validated.front(), &r), std::make_pair(1, 1));
  const auto cone = build_ai0_minus(c, solve_iota(c).validated.front());
  EXPECT_EQ(r.r1, -1);
  EXPECT_EQ(r.r2, -2);
  EXPECT_EQ(support(cone, r.notImQTower), "c+Qb");
  EXPECT_EQ(support(cone, r.eventuallyImQTower), "Qc");
  EXPECT_TRUE(r.extras.empty());
}

TEST(Towers, MirrorTrefoilTops) {
  const auto m = mirror_dual(dataComplex("complexes/trefoil.json"));
  TowerReport r;
  EXPECT_EQ(involutiveV0s(m, solve_iota(m).validated.front(), &r), std::make_pair(0, -1));
  EXPECT_EQ(r.r1, 1);
  EXPECT_EQ(r.r2, 2);
  // The dual names the generator at Alexander 1 "c": the tops are [Uc + a] and [b].
  const auto cone = build_ai0_minus(m, solve_iota(m).validated.front());
  EXPECT_EQ(support(cone, r.eventuallyImQTower), "b");
}

TEST(Towers, QMembershipIsEventual) {
  const auto c = dataComplex("complexes/trefoil.json");
  const auto cone = build_ai0_minus(c, solve_iota(c).validated.front());
  const auto r = classifyTowers(cone);
  EXPECT_TRUE(inImageOfQ(cone, r.eventuallyImQTower));
  for (int depth : {0, 1, 4, 9})
    EXPECT_FALSE(inImageOfQ(cone, {r.notImQTower.support, r.notImQTower.grading - 2 * depth}));
}

TEST(Values, WorkedExamples) {
  const auto trefoil = dataComplex("complexes/trefoil.json");
  EXPECT_EQ(triple(trefoil), (InvariantTriple{1, 1, 1}));
  EXPECT_EQ(triple(mirror_dual(trefoil)), (InvariantTriple{0, 0, -1}));
  EXPECT_EQ(triple(dataComplex("complexes/figure_eight.json")), (InvariantTriple{0, 1, 0}));
  EXPECT_EQ(triple(dataComplex("complexes/11n57.json")), (InvariantTriple{1, 2, 1}));
  const auto v = triple(dataComplex("complexes/10_161_diagram.json"));
  EXPECT_EQ(v.V0under, 0);
  EXPECT_EQ(v.V0over, -1);
}

TEST(Values, WorkedIotaGivesTheSameValues) {
  const auto c = dataComplex("complexes/11n57.json");
  EXPECT_EQ(involutiveV0s(c, cfk::testing::iota11n57(c)), std::make_pair(2, 1));
  const auto split = cfk::testing::split10_161();
  EXPECT_EQ(involutiveV0s(split, cfk::testing::iota10_161(split, false)), std::make_pair(0, -1));
  EXPECT_EQ(involutiveV0s(split, cfk::testing::iota10_161(split, true)), std::make_pair(0, -1));
}

TEST(Values, EveryClassAgrees) {
  for (const char* f : {"11n57", "figure_eight", "10_136"}) {
    const auto c = reduce(dataComplex(std::string("complexes/") + f + ".json")).first;
    const auto v = compute_involutive_v0s(c, solve_iota(c));
    EXPECT_TRUE(v.classesAgree()) << f;
    EXPECT_EQ(v.perClass.size(), solve_iota(c).validated.size()) << f;
  }
}
