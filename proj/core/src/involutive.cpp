#include "cfk/involutive.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

#include "cfk/errors.hpp"

namespace cfk {

ConeComplex build_ai0_minus(const CfkComplex& c, const GradedMap& iota) {
  const std::size_t n = c.size();
  const auto a0 = build_a0_minus(c);
  // (iota + Id) on the basis U^max(0, A) x.
  const auto connecting = iota.matrix + gf2::BitMatrix::identity(n);
  for (std::size_t to = 0; to < n; ++to)
    for (auto from : connecting.row(to).ones())
      if (a0.maslov[to] < a0.maslov[from] || (a0.maslov[from] - a0.maslov[to]) % 2 != 0)
        throw Error(ErrorCode::IotaNotA0Compatible,
                    "(iota + Id)(" + a0.names[from] + ") leaves A0^- at " + a0.names[to]);

  ConeComplex cone;
  cone.half = n;
  auto& f = cone.complex;
  // The Q-copy keeps the gradings of A0^- and the plain copy sits one above.
  f.names = a0.names;
  for (auto m : a0.maslov) f.maslov.push_back(m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    f.names.push_back("Q" + a0.names[i]);
    f.maslov.push_back(a0.maslov[i]);
  }
  f.d = gf2::BitMatrix(2 * n, 2 * n);
  cone.q = gf2::BitMatrix(2 * n, 2 * n);
  for (std::size_t to = 0; to < n; ++to) {
    for (auto from : a0.d.row(to).ones()) {
      f.d.set(to, from);
      f.d.set(n + to, n + from);
    }
    for (auto from : connecting.row(to).ones()) f.d.set(n + to, from);
    cone.q.set(n + to, to);
  }
  return cone;
}

namespace {

// Basis of the grading-r piece: generators whose U-multiples reach r.
std::vector<std::size_t> piece(const FreeGradedComplex& f, int r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.maslov[i] >= r && (f.maslov[i] - r) % 2 == 0) out.push_back(i);
  return out;
}

}  // namespace

bool inImageOfQ(const ConeComplex& cone, const HomogeneousElement& element) {
  const auto& f = cone.complex;
  const int r = element.grading;
  const auto target = piece(f, r);
  const auto source = piece(f, r + 1);

  gf2::BitMatrix d(target.size(), source.size());
  for (std::size_t row = 0; row < target.size(); ++row)
    for (std::size_t col = 0; col < source.size(); ++col)
      if (f.d.test(target[row], source[col])) d.set(row, col);

  auto restrict = [&](const gf2::BitVector& v) {
    gf2::BitVector out(target.size());
    for (std::size_t row = 0; row < target.size(); ++row)
      if (v.test(target[row])) out.set(row);
    return out;
  };
  auto lift = [&](const gf2::BitVector& local) {
    gf2::BitVector out(f.size());
    for (auto col : local.ones()) out.set(source[col]);
    return out;
  };

  gf2::EchelonBasis span(target.size());
  for (const auto& z : gf2::nullspace(d)) span.insert(restrict(cone.q.apply(lift(z))));
  const auto dt = d.transposed();
  for (std::size_t col = 0; col < source.size(); ++col) span.insert(dt.row(col));

  for (auto i : element.support.ones())
    if (f.maslov[i] < r || (f.maslov[i] - r) % 2 != 0)
      throw Error(ErrorCode::VerificationFailed, "element is not homogeneous");
  return span.contains(restrict(element.support));
}

TowerReport classifyTowers(const ConeComplex& cone) {
  const auto m = snf_homology(cone.complex);
  if (m.towers.size() != 2)
    throw Error(ErrorCode::TowerCountUnexpected,
                "AI0^- has " + std::to_string(m.towers.size()) + " free towers, expected 2");

  int maxTorsion = 0;
  for (const auto& t : m.torsion) maxTorsion = std::max(maxTorsion, t.order);
  // Past every torsion order and the gap between the towers, membership in
  // Im(Q) no longer changes with the power of U.
  const int depth = maxTorsion + std::abs(m.towers[0].grading - m.towers[1].grading) + 2;
  std::vector<bool> eventually;
  for (const auto& t : m.towers) eventually.push_back(inImageOfQ(cone, {t.support, t.grading - 2 * depth}));

  if (eventually[0] == eventually[1])
    throw Error(ErrorCode::TowerClassificationAmbiguous,
                eventually[0] ? "both towers are eventually in Im(Q)" : "neither tower is eventually in Im(Q)");
  const std::size_t under = eventually[0] ? 1 : 0;
  TowerReport report;
  report.notImQTower = m.towers[under];
  report.r1 = m.towers[under].grading;
  report.eventuallyImQTower = m.towers[1 - under];
  report.r2 = m.towers[1 - under].grading;
  report.extras = m.torsion;
  if ((report.r1 - 1) % 2 != 0 || report.r2 % 2 != 0)
    throw Error(ErrorCode::TowerClassificationAmbiguous,
                "tower gradings " + std::to_string(report.r1) + ", " + std::to_string(report.r2) +
                    " have the wrong parity");
  return report;
}

std::pair<int, int> involutiveV0s(const CfkComplex& c, const GradedMap& iota, TowerReport* report) {
  const auto towers = classifyTowers(build_ai0_minus(c, iota));
  if (report) *report = towers;
  return {-(towers.r1 - 1) / 2, -towers.r2 / 2};
}

bool InvolutiveValues::classesAgree() const {
  return std::all_of(perClass.begin(), perClass.end(), [&](const auto& p) { return p == perClass.front(); });
}

InvolutiveValues compute_involutive_v0s(const CfkComplex& c, const IotaSolutionSet& solutions) {
  if (solutions.equivalenceClasses.empty()) throw Error(ErrorCode::NoSolution, "no iota to use");
  InvolutiveValues out;
  for (std::size_t k = 0; k < solutions.equivalenceClasses.size(); ++k) {
    const auto& iota = solutions.validated.at(solutions.equivalenceClasses[k].front());
    TowerReport report;
    out.perClass.push_back(involutiveV0s(c, iota, &report));
    if (k == 0) out.towers = std::move(report);
  }
  std::tie(out.vUnder, out.vOver) = out.perClass.front();
  return out;
}

}  // namespace cfk
