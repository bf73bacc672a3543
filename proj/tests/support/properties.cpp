#include "properties.hpp"

#include <algorithm>
#include <cstdlib>

#include "cfk/errors.hpp"
#include "cfk/homology.hpp"
#include "cfk/involution.hpp"
#include "cfk/involutive.hpp"
#include "cfk/reduction.hpp"

namespace cfk::testing {

namespace {

int alexanderSpread(const CfkComplex& c) {
  int lo = 0;
  int hi = 0;
  for (const auto& g : c.generators()) {
    lo = std::min(lo, g.alexander);
    hi = std::max(hi, g.alexander);
  }
  return hi - lo;
}

void checkOracle(std::vector<std::string>& out, const std::string& what, const FreeGradedComplex& f, int n) {
  const auto m = snf_homology(f);
  for (int level : {n, n + 2})
    if (truncatedHomology(f, level) != predictedTruncatedHomology(m, level))
      out.push_back(what + ": SNF disagrees with U-truncation at N=" + std::to_string(level));
}

SideReport checkSide(std::vector<std::string>& out, const std::string& side, const CfkComplex& c) {
  auto fail = [&](const std::string& s) { out.push_back(side + ": " + s); };
  SideReport r;

  const auto sigma = sarkar_map(c);
  if (sigma.kind != Filtration::Filtered || !checkMap(sigma, c, c).ok()) fail("sigma is not a filtered graded map");
  const GradedMap sigma2{sigma.matrix * sigma.matrix, 0, Filtration::Filtered};
  const GradedMap id{gf2::BitMatrix::identity(c.size()), 0, Filtration::Filtered};
  if (!maps_homotopic(c, sigma2, id, Filtration::Filtered)) fail("sigma^2 is not homotopic to Id");

  const auto inv = computeInvariants(c);
  r.values = inv.values;
  r.classes = inv.iota.validated.size();
  r.classesAgree = inv.classesAgree;
  const auto& v = inv.values;
  if (!(v.V0under >= v.V0 && v.V0 >= v.V0over)) fail("V0under >= V0 >= V0over fails");
  if (v.V0 < 0) fail("V0 < 0");
  if (v.V0 != compute_v0(c)) fail("V0 differs from compute_v0");
  for (std::size_t i = 0; i < inv.iota.validated.size(); ++i) {
    const auto report = validateIota(c, inv.iota.validated[i]);
    if (!report.ok()) fail("iota class " + std::to_string(i) + ": " + report.problems.front());
  }

  // Cone sanity and the truncation oracle, on the first class.
  const auto& iota = inv.iota.validated.front();
  const auto cone = build_ai0_minus(c, iota);
  if (!checkFreeComplex(cone.complex).ok()) fail("cone is not a graded complex");
  if (!(cone.q * cone.q).isZero()) fail("Q^2 != 0");
  if (cone.q * cone.complex.d != cone.complex.d * cone.q) fail("Q does not commute with d");
  const int n = alexanderSpread(c) + 4;
  checkOracle(out, side + " A0", build_a0_minus(c), n);
  checkOracle(out, side + " AI0", cone.complex, n);

  // Another filtered basis gives the same values, solved afresh and by transport.
  const auto [moved, change] = simplify(c);
  if (!verify_complex(moved).ok()) fail("simplified basis does not verify");
  if (compute_v0(moved) != v.V0) fail("V0 changes under basis change");
  if (computeInvariants(moved).values != v) fail("invariants change under basis change");
  const auto carried = transport(iota, change);
  if (!validateIota(moved, carried).ok()) fail("transported iota fails validation");
  if (involutiveV0s(moved, carried) != involutiveV0s(c, iota)) fail("transported iota gives different values");
  return r;
}

}  // namespace

PropertyReport checkProperties(const std::string& name, const CfkComplex& c) {
  PropertyReport r;
  r.name = name;
  auto& out = r.failures;
  try {
    const auto report = verify_complex(c);
    for (const auto& p : report.problems) out.push_back("verify: " + p);
    const auto delta = alexander_polynomial(c);
    if (!isSymmetric(delta)) out.push_back("Alexander polynomial not symmetric");
    if (std::abs(evaluateAtOne(delta)) != 1) out.push_back("Alexander polynomial at 1 is not +-1");
    if (totalRank(hfk_hat(c)) % 2 != 1) out.push_back("HFK-hat rank is even");
    if (!(mirror_dual(mirror_dual(c)) == c)) out.push_back("dual of dual differs");

    const auto reduced = reduce(c).first;
    if (!verify_complex(reduced).ok()) out.push_back("reduced complex does not verify");
    if (hfk_hat(reduced) != hfk_hat(c)) out.push_back("reduce changes HFK-hat");
    if (alexander_polynomial(reduced) != delta) out.push_back("reduce changes the Alexander polynomial");
    if (compute_v0(reduced) != compute_v0(c)) out.push_back("reduce changes V0");
    if (!(reduce(reduced).first == reduced)) out.push_back("reduce is not idempotent");

    r.knot = checkSide(out, "K", reduced);
    r.mirror = checkSide(out, "mirror", mirror_dual(reduced));
  } catch (const Error& e) {
    out.push_back(std::string("error: ") + e.what());
  }
  return r;
}

}  // namespace cfk::testing
