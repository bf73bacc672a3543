#include <gtest/gtest.h>

#include "cfk/errors.hpp"
#include "cfk/floer.hpp"
#include "cfk/involution.hpp"
#include "cfk/reduction.hpp"
#include "shipped.hpp"
#include "worked_maps.hpp"

using namespace cfk;
using cfk::testing::dataComplex;
using cfk::testing::mapFromPairs;

namespace {

CfkComplex trefoil() { return dataComplex("complexes/trefoil.json"); }
CfkComplex figureEight() { return dataComplex("complexes/figure_eight.json"); }
CfkComplex n57() { return dataComplex("complexes/11n57.json"); }

bool has(const CfkComplex& c, const GradedMap& f, const std::string& from, const std::string& to) {
  return f.matrix.test(c.indexOf(to), c.indexOf(from));
}

// Identity except for the listed extra entries.
GradedMap identityPlus(const CfkComplex& c, const cfk::testing::NamePairs& extra) {
  auto f = mapFromPairs(c, extra, 0, Filtration::Filtered);
  f.matrix += gf2::BitMatrix::identity(c.size());
  return f;
}

bool containsClassOf(const CfkComplex& c, const IotaSolutionSet& s, const GradedMap& iota) {
  for (const auto& v : s.validated)
    if (maps_homotopic(c, v, iota, Filtration::SkewFiltered)) return true;
  return false;
}

ErrorCode solveError(const CfkComplex& c) {
  try {
    solve_iota(c);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

CfkComplex boxes(int count) {
  std::vector<Generator> g{{"x", 0, 0}};
  std::vector<Arrow> arrows;
  for (int i = 0; i < count; ++i) {
    const auto b = g.size();
    const auto s = std::to_string(i);
    g.insert(g.end(), {{"a" + s, 0, 0}, {"b" + s, 1, 1}, {"c" + s, -1, -1}, {"e" + s, 0, 0}});
    arrows.insert(arrows.end(), {{b, b + 1, 1}, {b, b + 2, 0}, {b + 1, b + 3, 0}, {b + 2, b + 3, 1}});
  }
  return CfkComplex(g, arrows);
}

}  // namespace

TEST(PhiPsi, Trefoil) {
  const auto c = trefoil();
  const auto [phi, psi] = phi_psi(c);
  EXPECT_TRUE(has(c, phi, "b", "a"));
  EXPECT_TRUE(has(c, psi, "b", "c"));
  EXPECT_EQ(phi.matrix.countOnes(), 1u);
  EXPECT_EQ(psi.matrix.countOnes(), 1u);
  // Phi(b) = Ua.
  const auto e = entries(phi, c, c);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].upower, 1);
}

TEST(PhiPsi, NoArrows) {
  const auto [phi, psi] = phi_psi(dataComplex("complexes/unknot.json"));
  EXPECT_TRUE(phi.matrix.isZero());
  EXPECT_TRUE(psi.matrix.isZero());
}

TEST(PhiPsi, N57) {
  const auto c = n57();
  const auto [phi, psi] = phi_psi(c);
  EXPECT_TRUE(has(c, psi, "d", "f"));
  EXPECT_TRUE(has(c, phi, "f", "b"));
  EXPECT_EQ(phi.kind, Filtration::Filtered);
  EXPECT_EQ(psi.kind, Filtration::Filtered);
}

TEST(Sarkar, N57) {
  const auto c = n57();
  const auto sigma = sarkar_map(c);
  EXPECT_EQ(sigma.matrix, identityPlus(c, {{"d", "b"}, {"j", "i"}, {"p", "n"}}).matrix);
}

TEST(Sarkar, TrefoilIsIdentity) { EXPECT_EQ(sarkar_map(trefoil()).matrix, gf2::BitMatrix::identity(3)); }

TEST(Sarkar, FigureEight) {
  const auto c = figureEight();
  EXPECT_EQ(sarkar_map(c).matrix, identityPlus(c, {{"a", "e"}}).matrix);
}

TEST(Sarkar, SquareIsHomotopicToIdentity) {
  for (const auto& c : {trefoil(), figureEight(), n57()}) {
    const auto s = sarkar_map(c);
    const GradedMap s2{s.matrix * s.matrix, 0, Filtration::Filtered};
    const GradedMap id{gf2::BitMatrix::identity(c.size()), 0, Filtration::Filtered};
    EXPECT_TRUE(maps_homotopic(c, s2, id, Filtration::Filtered));
  }
}

TEST(Solve, FigureEightContainsWorkedIota) {
  const auto c = figureEight();
  const auto iota = cfk::testing::iotaFigureEight(c);
  EXPECT_TRUE(validateIota(c, iota).ok());
  const auto s = solve_iota(c);
  EXPECT_TRUE(containsClassOf(c, s, iota));
  EXPECT_TRUE(s.exhaustive);
}

TEST(Solve, N57WorkedIota) {
  const auto c = n57();
  const auto iota = cfk::testing::iota11n57(c);
  EXPECT_TRUE(validateIota(c, iota).ok());
  EXPECT_TRUE(has(c, iota, "p", "d") && has(c, iota, "p", "b"));
  EXPECT_TRUE(has(c, iota, "m", "e") && has(c, iota, "m", "g"));
  const auto s = solve_iota(c);
  EXPECT_TRUE(containsClassOf(c, s, iota));
  // The classes differ by filtered changes of basis only.
  EXPECT_EQ(classesUpToBasisChange(c, s).size(), 1u);
}

TEST(Solve, N57SquareEqualsSigmaWithZeroHomotopy) {
  const auto c = n57();
  const auto iota = cfk::testing::iota11n57(c);
  const GradedMap square{iota.matrix * iota.matrix, 0, Filtration::Filtered};
  const auto h = maps_homotopic(c, square, sarkar_map(c), Filtration::Filtered);
  ASSERT_TRUE(h);
  EXPECT_TRUE(h->matrix.isZero());
}

TEST(Solve, TenOneSixtyOneBothMapsAndHomotopy) {
  const auto c = cfk::testing::split10_161();
  const auto iota = cfk::testing::iota10_161(c, false);
  const auto iotaPrime = cfk::testing::iota10_161(c, true);
  EXPECT_TRUE(validateIota(c, iota).ok());
  EXPECT_TRUE(validateIota(c, iotaPrime).ok());
  // The two differ exactly on x6.
  const auto diff = iota.matrix + iotaPrime.matrix;
  EXPECT_EQ(diff.countOnes(), 1u);
  EXPECT_TRUE(diff.test(c.indexOf("x3"), c.indexOf("x6")));

  const auto g = cfk::testing::homotopy10_161(c);
  EXPECT_TRUE(checkMap(g, c, c).ok());
  EXPECT_EQ(commutator(c, g).matrix, diff);
  const auto found = maps_homotopic(c, iota, iotaPrime, Filtration::SkewFiltered);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->matrix, g.matrix);

  const auto s = solve_iota(c);
  EXPECT_TRUE(containsClassOf(c, s, iota));
  EXPECT_TRUE(containsClassOf(c, s, iotaPrime));
}

TEST(Solve, MirrorSolutionsAreDuals) {
  for (const auto& raw : {trefoil(), figureEight()}) {
    const auto c = reduce(raw).first;
    const auto m = mirror_dual(c);
    const auto s = solve_iota(c);
    const auto sm = solve_iota(m);
    EXPECT_EQ(s.validatedTotal, sm.validatedTotal);
    for (const auto& v : s.validated) EXPECT_TRUE(containsClassOf(m, sm, dualMap(v)));
  }
}

TEST(Solve, ClassesAreSingletonsAndDistinct) {
  const auto c = n57();
  const auto s = solve_iota(c);
  EXPECT_EQ(s.equivalenceClasses.size(), s.validated.size());
  for (std::size_t i = 0; i < s.validated.size(); ++i)
    for (std::size_t j = i + 1; j < s.validated.size(); ++j)
      EXPECT_FALSE(maps_homotopic(c, s.validated[i], s.validated[j], Filtration::SkewFiltered));
}

TEST(Solve, KernelMembersAreChainMaps) {
  const auto c = n57();
  const auto s = solve_iota(c);
  for (const auto& k : s.kernel) {
    EXPECT_TRUE(commutator(c, k).matrix.isZero());
    EXPECT_TRUE(checkMap(k, c, c).ok());
  }
}

TEST(Solve, LargeSolutionSpaceIsSampled) {
  const auto c = reduce(complexFromParameterization({14, 7, -7, 1})).first;
  const auto s = solve_iota(c);
  EXPECT_FALSE(s.exhaustive);
  EXPECT_GT(s.validatedTotal, kIotaStoredClasses);
  EXPECT_EQ(s.validated.size(), kIotaStoredClasses);
}

TEST(Solve, TooManyDirections) { EXPECT_EQ(solveError(boxes(8)), ErrorCode::SolutionSpaceTooLarge); }

TEST(Solve, NoIotaOnAsymmetricComplex) {
  EXPECT_EQ(solveError(CfkComplex({{"x", 1, 0}}, {})), ErrorCode::NoSolution);
}

TEST(Homotopic, EqualMapsGiveZeroHomotopy) {
  const auto c = n57();
  const auto iota = cfk::testing::iota11n57(c);
  const auto h = maps_homotopic(c, iota, iota, Filtration::SkewFiltered);
  ASSERT_TRUE(h);
  EXPECT_TRUE(h->matrix.isZero());
}

TEST(Homotopic, IdentityAndSigmaDifferOnFigureEight) {
  const auto c = figureEight();
  const GradedMap id{gf2::BitMatrix::identity(c.size()), 0, Filtration::Filtered};
  // sigma(a) = a + e, and a + e is not a boundary plus a homotopy image.
  EXPECT_FALSE(maps_homotopic(c, sarkar_map(c), id, Filtration::Filtered));
}

TEST(Validate, RejectsNonInvertibleAndNonChainMaps) {
  const auto c = trefoil();
  EXPECT_FALSE(validateIota(c, GradedMap{gf2::BitMatrix(3, 3), 0, Filtration::SkewFiltered}).ok());
  // Identity is not skew-filtered on the trefoil.
  EXPECT_FALSE(validateIota(c, GradedMap{gf2::BitMatrix::identity(3), 0, Filtration::SkewFiltered}).ok());
}

TEST(Transport, WorkedIotaSurvivesBasisChange) {
  const auto c = n57();
  const auto [moved, change] = simplify(c);
  EXPECT_TRUE(validateIota(moved, transport(cfk::testing::iota11n57(c), change)).ok());
}
