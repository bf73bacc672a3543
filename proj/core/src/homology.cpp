#include "cfk/homology.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

int floorHalf(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

void addColumn(gf2::BitMatrix& m, std::size_t dst, std::size_t src) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (m.test(r, src)) m.flip(r, dst);
}

std::string powerName(int a, const std::string& name) {
  if (a == 0) return name;
  if (a == 1) return "U" + name;
  return "U^" + std::to_string(a) + name;
}

}  // namespace

ValidationReport checkFreeComplex(const FreeGradedComplex& f) {
  ValidationReport report;
  const std::size_t n = f.size();
  if (f.maslov.size() != n || f.d.rows() != n || f.d.cols() != n) {
    report.add("size mismatch between names, gradings and differential");
    return report;
  }
  for (std::size_t to = 0; to < n; ++to)
    for (auto from : f.d.row(to).ones()) {
      const int diff = f.maslov[to] - f.maslov[from] + 1;
      if (diff % 2 != 0 || diff < 0)
        report.add("entry " + f.names[from] + " -> " + f.names[to] + " has no nonnegative U-power");
    }
  if (!(f.d * f.d).isZero()) report.add("d^2 != 0");
  return report;
}

ModuleDecomposition snf_homology(const FreeGradedComplex& f) {
  if (auto report = checkFreeComplex(f); !report.ok())
    throw Error(ErrorCode::VerificationFailed, report.problems.front());
  const std::size_t n = f.size();
  gf2::BitMatrix d = f.d;
  gf2::BitMatrix basis = gf2::BitMatrix::identity(n);
  gf2::BitMatrix coords = basis;
  const auto& g = f.maslov;

  // Basis element a becomes a + U^p b.
  auto addTo = [&](std::size_t a, std::size_t b) {
    addColumn(d, a, b);
    d.row(b) ^= d.row(a);
    addColumn(basis, a, b);
    coords.row(b) ^= coords.row(a);
  };
  auto exponent = [&](std::size_t from, std::size_t to) { return (g[to] - g[from] + 1) / 2; };

  ModuleDecomposition out;
  std::vector<bool> used(n, false);
  for (;;) {
    std::optional<std::tuple<int, std::string, std::string, std::size_t, std::size_t>> best;
    for (std::size_t to = 0; to < n; ++to) {
      if (used[to]) continue;
      for (auto from : d.row(to).ones()) {
        if (used[from]) continue;
        auto key = std::make_tuple(exponent(from, to), f.names[from], f.names[to], from, to);
        if (!best || key < *best) best = key;
      }
    }
    if (!best) break;
    const auto [e, xn, yn, x, y] = *best;
    // Minimality of e keeps every change below polynomial.
    for (auto v : d.column(x).ones())
      if (v != y) addTo(y, v);
    for (auto src : d.row(y).ones())
      if (src != x) addTo(src, x);
    used[x] = used[y] = true;
    out.pairs.push_back({x, y, e});
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    out.towerBasis.push_back(i);
    out.towers.push_back({basis.column(i), g[i]});
  }
  for (const auto& p : out.pairs)
    if (p.exponent > 0) out.torsion.push_back({{basis.column(p.target), g[p.target]}, p.exponent});
  out.basis = std::move(basis);
  out.coords = std::move(coords);
  out.grading = g;
  return out;
}

HomologyClass classOf(const ModuleDecomposition& m, const HomogeneousElement& cycle) {
  const std::size_t n = m.grading.size();
  if (cycle.support.size() != n) throw Error(ErrorCode::VerificationFailed, "element has the wrong size");
  // A basis change preserves gradings, so the coefficient powers stay valid.
  for (auto i : cycle.support.ones())
    if (m.grading[i] < cycle.grading || (m.grading[i] - cycle.grading) % 2 != 0)
      throw Error(ErrorCode::VerificationFailed, "element is not homogeneous of grading " + std::to_string(cycle.grading));
  const auto local = m.coords.apply(cycle.support);

  HomologyClass cls{gf2::BitVector(m.towers.size()), gf2::BitVector(m.torsion.size())};
  for (std::size_t t = 0; t < m.towerBasis.size(); ++t)
    if (local.test(m.towerBasis[t])) cls.towers.set(t);
  std::size_t torsion = 0;
  for (const auto& p : m.pairs) {
    if (local.test(p.source)) throw Error(ErrorCode::VerificationFailed, "element is not a cycle");
    if (p.exponent == 0) continue;
    const int k = (m.grading[p.target] - cycle.grading) / 2;
    if (local.test(p.target) && k < p.exponent) cls.torsion.set(torsion);
    ++torsion;
  }
  return cls;
}

FreeGradedComplex build_a0_minus(const CfkComplex& c) {
  FreeGradedComplex f;
  for (const auto& g : c.generators()) {
    const int a = std::max(0, g.alexander);
    f.names.push_back(powerName(a, g.name));
    f.maslov.push_back(g.maslov - 2 * a);
  }
  f.d = c.differential();
  return f;
}

int compute_v0(const CfkComplex& c) {
  const auto m = snf_homology(build_a0_minus(c));
  if (m.towers.size() != 1)
    throw Error(ErrorCode::TowerCountUnexpected, "A0^- has " + std::to_string(m.towers.size()) + " free towers");
  const int grading = m.towers.front().grading;
  if (grading % 2 != 0) throw Error(ErrorCode::TowerCountUnexpected, "free tower in odd grading");
  return -floorHalf(grading);
}

std::map<int, int> truncatedHomology(const FreeGradedComplex& f, int n) {
  const std::size_t size = f.size();
  const std::size_t levels = static_cast<std::size_t>(std::max(0, n));
  auto index = [&](std::size_t gen, std::size_t k) { return gen * levels + k; };
  gf2::BitMatrix d(size * levels, size * levels);
  std::vector<int> grading(size * levels);
  for (std::size_t gen = 0; gen < size; ++gen)
    for (std::size_t k = 0; k < levels; ++k) grading[index(gen, k)] = f.maslov[gen] - 2 * static_cast<int>(k);
  for (std::size_t to = 0; to < size; ++to)
    for (auto from : f.d.row(to).ones()) {
      const auto e = static_cast<std::size_t>((f.maslov[to] - f.maslov[from] + 1) / 2);
      for (std::size_t k = 0; k + e < levels; ++k) d.set(index(to, k + e), index(from, k));
    }
  return gradedHomologyRanks(d, grading);
}

std::map<int, int> predictedTruncatedHomology(const ModuleDecomposition& m, int n) {
  std::map<int, int> ranks;
  for (const auto& t : m.towers)
    for (int k = 0; k < n; ++k) ++ranks[t.grading - 2 * k];
  for (const auto& p : m.pairs) {
    for (int k = 0; k < std::min(p.exponent, n); ++k) ++ranks[m.grading[p.target] - 2 * k];
    for (int k = std::max(0, n - p.exponent); k < n; ++k) ++ranks[m.grading[p.source] - 2 * k];
  }
  std::erase_if(ranks, [](const auto& kv) { return kv.second == 0; });
  return ranks;
}

}  // namespace cfk
