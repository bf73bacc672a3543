#include "cfk/involution.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <tuple>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

GradedMap unitMap(std::size_t n, const MapEntry& e, int shift, Filtration kind) {
  GradedMap h{gf2::BitMatrix(n, n), shift, kind};
  h.matrix.set(e.to, e.from);
  return h;
}

GradedMap fromFlat(const gf2::BitVector& v, std::size_t n, int shift, Filtration kind) {
  return {gf2::BitMatrix::unflatten(v, n, n), shift, kind};
}

}  // namespace

std::pair<GradedMap, GradedMap> phi_psi(const CfkComplex& c) {
  const std::size_t n = c.size();
  GradedMap phi{gf2::BitMatrix(n, n), -1, Filtration::Filtered};
  GradedMap psi = phi;
  for (const auto& [comp, part] : decompose_differential(c)) {
    // Formal U- and V-derivatives: diagonal components count too.
    if (comp.i % 2 != 0) phi.matrix += part;
    if (comp.j % 2 != 0) psi.matrix += part;
  }
  return {phi, psi};
}

GradedMap sarkar_map(const CfkComplex& c) {
  auto [phi, psi] = phi_psi(c);
  // Phi o Psi has shift -2 and U^-1 brings it back to 0.
  return {gf2::BitMatrix::identity(c.size()) + phi.matrix * psi.matrix, 0, Filtration::Filtered};
}

std::vector<MapEntry> allowedEntries(const CfkComplex& c, int maslovShift, Filtration kind) {
  std::vector<MapEntry> out;
  for (std::size_t from = 0; from < c.size(); ++from)
    for (std::size_t to = 0; to < c.size(); ++to) {
      auto p = entryPower(c.generator(from), c.generator(to), maslovShift);
      if (p && entryAllowed(c.generator(from), c.generator(to), *p, kind)) out.push_back({from, to, *p});
    }
  return out;
}

GradedMap commutator(const CfkComplex& c, const GradedMap& f) {
  const auto& d = c.differential();
  return {d * f.matrix + f.matrix * d, f.maslovShift - 1, Filtration::Unconstrained};
}

gf2::EchelonBasis homotopyImage(const CfkComplex& c, Filtration kind) {
  const std::size_t n = c.size();
  gf2::EchelonBasis image(n * n);
  for (const auto& e : allowedEntries(c, 1, kind))
    image.insert(commutator(c, unitMap(n, e, 1, kind)).matrix.flatten());
  return image;
}

std::optional<GradedMap> maps_homotopic(const CfkComplex& c, const GradedMap& f, const GradedMap& g,
                                        Filtration kind) {
  const std::size_t n = c.size();
  const int shift = f.maslovShift + 1;
  const auto candidates = allowedEntries(c, shift, kind);
  gf2::BitMatrix system(n * n, candidates.size());
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const auto image = commutator(c, unitMap(n, candidates[k], shift, kind)).matrix.flatten();
    for (auto r : image.ones()) system.set(r, k);
  }
  auto solution = gf2::solve(system, (f.matrix + g.matrix).flatten());
  if (!solution) return std::nullopt;
  GradedMap h{gf2::BitMatrix(n, n), shift, kind};
  for (auto k : solution->particular.ones()) h.matrix.set(candidates[k].to, candidates[k].from);
  return h;
}

ValidationReport validateIota(const CfkComplex& c, const GradedMap& iota) {
  ValidationReport report;
  if (iota.maslovShift != 0) report.add("iota does not preserve the Maslov grading");
  GradedMap skew = iota;
  skew.kind = Filtration::SkewFiltered;
  for (auto& p : checkMap(skew, c, c).problems) report.add(p);
  if (!report.ok()) return report;
  if (!commutator(c, iota).matrix.isZero()) report.add("iota is not a chain map");
  if (!gf2::inverse(iota.matrix)) report.add("iota is not invertible");
  const GradedMap square{iota.matrix * iota.matrix, 0, Filtration::Filtered};
  if (!maps_homotopic(c, square, sarkar_map(c), Filtration::Filtered))
    report.add("iota^2 is not filtered homotopic to the Sarkar map");
  return report;
}

namespace {

// One coordinate of iota^2 + sigma modulo filtered null-homotopic maps, as a
// polynomial in the direction coefficients t: constant + linear + sum over
// k < l of t_k t_l [bit l of quadratic[k]].
struct QuadraticEquation {
  bool constant = false;
  std::uint64_t linear = 0;
  std::vector<std::uint64_t> quadratic;
  std::uint64_t variables = 0;

  bool value(std::uint64_t t) const {
    bool v = constant ^ (std::popcount(linear & t) & 1);
    for (std::uint64_t rest = t & variables; rest; rest &= rest - 1) {
      const auto k = static_cast<std::size_t>(std::countr_zero(rest));
      v ^= std::popcount(quadratic[k] & t) & 1;
    }
    return v;
  }
  auto key() const { return std::tie(constant, linear, quadratic); }
};

std::vector<QuadraticEquation> squareEquations(const CfkComplex& c, const std::vector<gf2::BitVector>& directions) {
  const std::size_t n = c.size();
  const std::size_t q = directions.size();
  const auto filteredNull = homotopyImage(c, Filtration::Filtered);
  std::vector<gf2::BitMatrix> dirs;
  for (const auto& v : directions) dirs.push_back(gf2::BitMatrix::unflatten(v, n, n));
  // Over F_2, (sum t_k D_k)^2 = sum t_k D_k^2 + sum_{k<l} t_k t_l (D_k D_l + D_l D_k).
  const auto constant = filteredNull.reduce(sarkar_map(c).matrix.flatten());
  std::vector<gf2::BitVector> linear;
  std::vector<std::vector<gf2::BitVector>> quadratic(q);
  for (std::size_t k = 0; k < q; ++k) {
    linear.push_back(filteredNull.reduce((dirs[k] * dirs[k]).flatten()));
    for (std::size_t l = k + 1; l < q; ++l)
      quadratic[k].push_back(filteredNull.reduce((dirs[k] * dirs[l] + dirs[l] * dirs[k]).flatten()));
  }

  std::vector<QuadraticEquation> out;
  for (std::size_t e = 0; e < n * n; ++e) {
    QuadraticEquation eq;
    eq.constant = constant.test(e);
    eq.quadratic.assign(q, 0);
    for (std::size_t k = 0; k < q; ++k) {
      if (linear[k].test(e)) eq.linear |= std::uint64_t{1} << k;
      for (std::size_t l = k + 1; l < q; ++l)
        if (quadratic[k][l - k - 1].test(e)) eq.quadratic[k] |= std::uint64_t{1} << l;
      if (eq.quadratic[k]) eq.variables |= (std::uint64_t{1} << k) | eq.quadratic[k];
    }
    eq.variables |= eq.linear;
    if (eq.variables == 0 && !eq.constant) continue;
    if (std::none_of(out.begin(), out.end(), [&](const auto& o) { return o.key() == eq.key(); }))
      out.push_back(std::move(eq));
  }
  return out;
}

}  // namespace

IotaSolutionSet solve_iota(const CfkComplex& c) {
  const std::size_t n = c.size();
  const auto unknowns = allowedEntries(c, 0, Filtration::SkewFiltered);

  // Chain-map condition d iota + iota d = 0, one column per unknown entry.
  gf2::BitMatrix system(n * n, unknowns.size());
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const auto image = commutator(c, unitMap(n, unknowns[k], 0, Filtration::SkewFiltered)).matrix.flatten();
    for (auto r : image.ones()) system.set(r, k);
  }
  auto toMap = [&](const gf2::BitVector& coeffs) {
    GradedMap m{gf2::BitMatrix(n, n), 0, Filtration::SkewFiltered};
    for (auto k : coeffs.ones()) m.matrix.set(unknowns[k].to, unknowns[k].from);
    return m;
  };

  IotaSolutionSet out;
  out.particular = {gf2::BitMatrix(n, n), 0, Filtration::SkewFiltered};
  for (const auto& v : gf2::nullspace(system)) out.kernel.push_back(toMap(v));

  // Directions independent modulo skew-filtered null-homotopic maps, so
  // distinct coefficient vectors are distinct classes.
  const auto nullHomotopic = homotopyImage(c, Filtration::SkewFiltered);
  auto quotient = nullHomotopic;
  std::vector<gf2::BitVector> directions;
  for (const auto& k : out.kernel) {
    auto flat = k.matrix.flatten();
    if (quotient.insert(flat)) directions.push_back(nullHomotopic.reduce(flat));
  }
  const std::size_t q = directions.size();
  out.quotientDimension = q;
  if (q > kIotaDirectionLimit)
    throw Error(ErrorCode::SolutionSpaceTooLarge,
                std::to_string(q) + " free directions for iota (limit " + std::to_string(kIotaDirectionLimit) + ")");

  const auto equations = squareEquations(c, directions);
  for (const auto& eq : equations)
    if (eq.variables == 0) throw Error(ErrorCode::NoSolution, "iota^2 = sigma fails for every candidate");

  // Greedy order: next the variable that closes the most equations.
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> closes(q);
  std::uint64_t assigned = 0;
  for (std::size_t depth = 0; depth < q; ++depth) {
    std::size_t best = 0;
    std::pair<std::size_t, std::size_t> bestScore{0, 0};
    bool found = false;
    for (std::size_t k = 0; k < q; ++k) {
      const auto bit = std::uint64_t{1} << k;
      if (assigned & bit) continue;
      std::pair<std::size_t, std::size_t> score{0, 0};
      for (const auto& eq : equations) {
        if (!(eq.variables & bit)) continue;
        if ((eq.variables & ~(assigned | bit)) == 0) ++score.first;
        ++score.second;
      }
      if (!found || score > bestScore) {
        best = k;
        bestScore = score;
        found = true;
      }
    }
    const auto bit = std::uint64_t{1} << best;
    for (std::size_t e = 0; e < equations.size(); ++e)
      if ((equations[e].variables & bit) && (equations[e].variables & ~(assigned | bit)) == 0)
        closes[depth].push_back(e);
    order.push_back(best);
    assigned |= bit;
  }

  std::mt19937_64 rng(0x5eed1077a5e7c0deULL);
  std::vector<gf2::BitVector> kept;
  std::size_t nodes = 0;
  std::uint64_t t = 0;
  auto accept = [&] {
    gf2::BitVector flat(n * n);
    for (std::uint64_t rest = t; rest; rest &= rest - 1)
      flat ^= directions[static_cast<std::size_t>(std::countr_zero(rest))];
    if (!gf2::inverse(gf2::BitMatrix::unflatten(flat, n, n))) return;
    // Reservoir sampling keeps a uniform subset once the store is full.
    ++out.validatedTotal;
    if (kept.size() < kIotaStoredClasses) {
      kept.push_back(std::move(flat));
    } else {
      const auto slot = std::uniform_int_distribution<std::size_t>(0, out.validatedTotal - 1)(rng);
      if (slot < kIotaStoredClasses) kept[slot] = std::move(flat);
    }
  };
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == q) {
      accept();
      return;
    }
    const auto bit = std::uint64_t{1} << order[depth];
    for (bool value : {false, true}) {
      if (++nodes > kIotaNodeBudget) return;
      t = value ? (t | bit) : (t & ~bit);
      if (std::none_of(closes[depth].begin(), closes[depth].end(), [&](std::size_t e) { return equations[e].value(t); }))
        self(self, depth + 1);
    }
    t &= ~bit;
  };
  search(search, 0);

  out.exhaustive = nodes <= kIotaNodeBudget && out.validatedTotal <= kIotaStoredClasses;
  if (kept.empty()) {
    if (nodes > kIotaNodeBudget)
      throw Error(ErrorCode::SolutionSpaceTooLarge,
                  "search budget exhausted over " + std::to_string(q) + " directions with nothing validated");
    throw Error(ErrorCode::NoSolution, "no map satisfies the properties of iota");
  }
  for (auto& flat : kept) {
    out.equivalenceClasses.push_back({out.validated.size()});
    out.validated.push_back(fromFlat(flat, n, 0, Filtration::SkewFiltered));
  }
  return out;
}

std::optional<GradedMap> conjugating_map(const CfkComplex& c, const GradedMap& iota, const GradedMap& iotaPrime) {
  const std::size_t n = c.size();
  const auto fEntries = allowedEntries(c, 0, Filtration::Filtered);
  const auto hEntries = allowedEntries(c, 1, Filtration::SkewFiltered);
  const std::size_t nf = fEntries.size();

  // Rows: d f + f d, then f iota + iota' f + d H + H d.
  gf2::BitMatrix system(2 * n * n, nf + hEntries.size());
  for (std::size_t k = 0; k < nf; ++k) {
    const auto f = unitMap(n, fEntries[k], 0, Filtration::Filtered);
    for (auto r : commutator(c, f).matrix.flatten().ones()) system.set(r, k);
    for (auto r : (f.matrix * iota.matrix + iotaPrime.matrix * f.matrix).flatten().ones()) system.set(n * n + r, k);
  }
  for (std::size_t k = 0; k < hEntries.size(); ++k) {
    const auto h = unitMap(n, hEntries[k], 1, Filtration::SkewFiltered);
    for (auto r : commutator(c, h).matrix.flatten().ones()) system.set(n * n + r, nf + k);
  }

  gf2::EchelonBasis seen(nf);
  std::vector<gf2::BitMatrix> basis;
  for (const auto& v : gf2::nullspace(system)) {
    gf2::BitVector fPart(nf);
    for (auto i : v.ones())
      if (i < nf) fPart.set(i);
    if (!seen.insert(fPart)) continue;
    gf2::BitMatrix m(n, n);
    for (auto i : fPart.ones()) m.set(fEntries[i].to, fEntries[i].from);
    basis.push_back(std::move(m));
  }
  if (basis.empty()) return std::nullopt;

  auto accept = [&](const gf2::BitMatrix& m) -> std::optional<GradedMap> {
    if (gf2::inverse(m)) return GradedMap{m, 0, Filtration::Filtered};
    return std::nullopt;
  };
  constexpr std::size_t kExhaustive = 16;
  constexpr std::size_t kSamples = 1 << 14;
  gf2::BitMatrix current(n, n);
  if (basis.size() <= kExhaustive) {
    for (std::size_t step = 1; step < (std::size_t{1} << basis.size()); ++step) {
      current += basis[static_cast<std::size_t>(std::countr_zero(step))];
      if (auto f = accept(current)) return f;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(0x1f2e3d4c5b6a7988ULL);
  for (std::size_t sample = 0; sample < kSamples; ++sample) {
    current = gf2::BitMatrix(n, n);
    for (const auto& b : basis)
      if (rng() & 1U) current += b;
    if (auto f = accept(current)) return f;
  }
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> classesUpToBasisChange(const CfkComplex& c, const IotaSolutionSet& solutions) {
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < solutions.equivalenceClasses.size(); ++k) {
    const auto& iota = solutions.validated.at(solutions.equivalenceClasses[k].front());
    auto it = std::find_if(groups.begin(), groups.end(), [&](const std::vector<std::size_t>& g) {
      const auto& lead = solutions.validated.at(solutions.equivalenceClasses[g.front()].front());
      return conjugating_map(c, lead, iota).has_value();
    });
    if (it == groups.end())
      groups.push_back({k});
    else
      it->push_back(k);
  }
  return groups;
}

GradedMap dualMap(const GradedMap& f) {
  const std::size_t n = f.matrix.rows();
  GradedMap out{gf2::BitMatrix(n, n), f.maslovShift, f.kind};
  for (std::size_t to = 0; to < n; ++to)
    for (auto from : f.matrix.row(to).ones()) out.matrix.set(n - 1 - from, n - 1 - to);
  return out;
}

GradedMap transport(const GradedMap& f, const BasisChange& change) {
  return {change.forward.matrix * f.matrix * change.backward.matrix, f.maslovShift, f.kind};
}

}  // namespace cfk
