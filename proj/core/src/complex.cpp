#include "cfk/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cfk/errors.hpp"

namespace cfk {

CfkComplex::CfkComplex(std::vector<Generator> generators, std::vector<Arrow> arrows)
    : generators_(std::move(generators)), arrows_(std::move(arrows)) {
  const std::size_t n = generators_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!byName_.emplace(generators_[i].name, i).second)
      throw Error(ErrorCode::VerificationFailed, "duplicate generator name '" + generators_[i].name + "'");
  }
  d_ = gf2::BitMatrix(n, n);
  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.from, a.to, a.upower) < std::tie(b.from, b.to, b.upower);
  });
  for (const auto& a : arrows_) {
    if (a.from >= n || a.to >= n)
      throw Error(ErrorCode::VerificationFailed, "arrow endpoint out of range");
    if (d_.test(a.to, a.from))
      throw Error(ErrorCode::VerificationFailed, "duplicate arrow " + generators_[a.from].name +
                                                     " -> " + generators_[a.to].name);
    d_.set(a.to, a.from);
  }
}

CfkComplex CfkComplex::fromDifferential(std::vector<Generator> generators, const gf2::BitMatrix& d) {
  std::vector<Arrow> arrows;
  for (std::size_t to = 0; to < d.rows(); ++to) {
    for (auto from : d.row(to).ones()) {
      auto n = entryPower(generators[from], generators[to], -1);
      if (!n)
        throw Error(ErrorCode::VerificationFailed, "differential entry " + generators[from].name +
                                                       " -> " + generators[to].name +
                                                       " has the wrong Maslov parity");
      arrows.push_back({from, to, *n});
    }
  }
  return CfkComplex(std::move(generators), std::move(arrows));
}

std::optional<std::size_t> CfkComplex::find(const std::string& name) const {
  auto it = byName_.find(name);
  if (it == byName_.end()) return std::nullopt;
  return it->second;
}

std::size_t CfkComplex::indexOf(const std::string& name) const {
  auto i = find(name);
  if (!i) throw Error(ErrorCode::VerificationFailed, "unknown generator '" + name + "'");
  return *i;
}

std::optional<int> entryPower(const Generator& from, const Generator& to, int maslovShift) {
  const int diff = to.maslov - from.maslov - maslovShift;
  if (diff % 2 != 0) return std::nullopt;
  return diff / 2;
}

std::vector<MapEntry> entries(const GradedMap& f, const CfkComplex& source, const CfkComplex& target) {
  std::vector<MapEntry> out;
  for (std::size_t to = 0; to < f.matrix.rows(); ++to) {
    for (auto from : f.matrix.row(to).ones()) {
      auto n = entryPower(source.generator(from), target.generator(to), f.maslovShift);
      out.push_back({from, to, n.value_or(0)});
    }
  }
  std::sort(out.begin(), out.end(), [](const MapEntry& a, const MapEntry& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  return out;
}

bool entryAllowed(const Generator& from, const Generator& to, int upower, Filtration kind) {
  switch (kind) {
    case Filtration::Filtered:
      return upower >= 0 && to.alexander - upower <= from.alexander;
    case Filtration::SkewFiltered:
      return upower >= std::max(-from.alexander, to.alexander);
    case Filtration::Unconstrained:
      return true;
  }
  return false;
}

ValidationReport checkMap(const GradedMap& f, const CfkComplex& source, const CfkComplex& target) {
  ValidationReport report;
  if (f.matrix.rows() != target.size() || f.matrix.cols() != source.size()) {
    report.add("map has the wrong shape");
    return report;
  }
  for (std::size_t to = 0; to < f.matrix.rows(); ++to) {
    for (auto from : f.matrix.row(to).ones()) {
      const auto& x = source.generator(from);
      const auto& y = target.generator(to);
      auto n = entryPower(x, y, f.maslovShift);
      if (!n) {
        report.add("entry " + x.name + " -> " + y.name + " is not Maslov homogeneous");
        continue;
      }
      if (!entryAllowed(x, y, *n, f.kind))
        report.add("entry " + x.name + " -> U^" + std::to_string(*n) + " " + y.name +
                   " violates the filtration");
    }
  }
  return report;
}

std::map<int, int> gradedHomologyRanks(const gf2::BitMatrix& d, const std::vector<int>& grading) {
  std::map<int, std::vector<std::size_t>> byGrading;
  for (std::size_t i = 0; i < grading.size(); ++i) byGrading[grading[i]].push_back(i);

  // rank of d restricted to sources of grading g
  auto sliceRank = [&](int g) -> std::size_t {
    auto src = byGrading.find(g);
    auto dst = byGrading.find(g - 1);
    if (src == byGrading.end() || dst == byGrading.end()) return 0;
    gf2::BitMatrix m(dst->second.size(), src->second.size());
    for (std::size_t r = 0; r < dst->second.size(); ++r)
      for (std::size_t c = 0; c < src->second.size(); ++c)
        if (d.test(dst->second[r], src->second[c])) m.set(r, c);
    return gf2::rank(std::move(m));
  };

  std::map<int, int> ranks;
  for (const auto& [g, idx] : byGrading) {
    const auto h = static_cast<int>(idx.size()) - static_cast<int>(sliceRank(g)) -
                   static_cast<int>(sliceRank(g + 1));
    if (h != 0) ranks[g] = h;
  }
  return ranks;
}

gf2::BitMatrix verticalDifferential(const CfkComplex& c) {
  gf2::BitMatrix d(c.size(), c.size());
  for (const auto& a : c.arrows())
    if (a.upower == 0) d.set(a.to, a.from);
  return d;
}

gf2::BitMatrix horizontalDifferential(const CfkComplex& c) {
  gf2::BitMatrix d(c.size(), c.size());
  for (const auto& a : c.arrows())
    if (c.generator(a.to).alexander - a.upower == c.generator(a.from).alexander) d.set(a.to, a.from);
  return d;
}

std::map<int, int> verticalHomology(const CfkComplex& c) {
  std::vector<int> grading;
  for (const auto& g : c.generators()) grading.push_back(g.maslov);
  return gradedHomologyRanks(verticalDifferential(c), grading);
}

std::map<int, int> horizontalHomology(const CfkComplex& c) {
  // Basis U^{A(x)} x of C{j=0}.
  std::vector<int> grading;
  for (const auto& g : c.generators()) grading.push_back(g.maslov - 2 * g.alexander);
  return gradedHomologyRanks(horizontalDifferential(c), grading);
}

namespace {

bool rankOneInZero(const std::map<int, int>& ranks) {
  return ranks.size() == 1 && ranks.begin()->first == 0 && ranks.begin()->second == 1;
}

std::string describe(const std::map<int, int>& ranks) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [g, r] : ranks) {
    os << (first ? "" : ", ") << g << ": " << r;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

ValidationReport verify_complex(const CfkComplex& c) {
  ValidationReport report;
  for (const auto& a : c.arrows()) {
    const auto& x = c.generator(a.from);
    const auto& y = c.generator(a.to);
    const std::string label = x.name + " -> U^" + std::to_string(a.upower) + " " + y.name;
    if (a.upower < 0) report.add("negative U-power on " + label);
    if (x.maslov - 1 != y.maslov - 2 * a.upower) report.add("Maslov inhomogeneous arrow " + label);
    if (y.alexander - a.upower > x.alexander) report.add("filtration violated by " + label);
  }
  if (!(c.differential() * c.differential()).isZero()) report.add("d^2 != 0");
  if (!report.ok()) return report;

  auto vert = verticalHomology(c);
  if (!rankOneInZero(vert)) report.add("vertical homology is " + describe(vert) + ", expected {0: 1}");
  auto horz = horizontalHomology(c);
  if (!rankOneInZero(horz)) report.add("horizontal homology is " + describe(horz) + ", expected {0: 1}");
  return report;
}

CfkComplex mirror_dual(const CfkComplex& c) {
  const std::size_t n = c.size();
  std::vector<Generator> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = c.generator(n - 1 - i);
    gens.push_back({g.name, -g.alexander, -g.maslov});
  }
  std::vector<Arrow> arrows;
  for (const auto& a : c.arrows()) arrows.push_back({n - 1 - a.to, n - 1 - a.from, a.upower});
  return CfkComplex(std::move(gens), std::move(arrows));
}

std::map<Component, gf2::BitMatrix> decompose_differential(const CfkComplex& c) {
  std::map<Component, gf2::BitMatrix> parts;
  for (const auto& a : c.arrows()) {
    const Component key{a.upower,
                        c.generator(a.from).alexander - c.generator(a.to).alexander + a.upower};
    auto [it, fresh] = parts.try_emplace(key, c.size(), c.size());
    it->second.set(a.to, a.from);
  }
  return parts;
}

LaurentPolynomial alexander_polynomial(const CfkComplex& c) {
  LaurentPolynomial p;
  for (const auto& g : c.generators()) p[g.alexander] += (g.maslov % 2 == 0) ? 1 : -1;
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

bool isSymmetric(const LaurentPolynomial& p) {
  for (const auto& [e, coeff] : p) {
    auto it = p.find(-e);
    if (it == p.end() || it->second != coeff) return false;
  }
  return true;
}

long evaluateAtOne(const LaurentPolynomial& p) {
  long sum = 0;
  for (const auto& [e, coeff] : p) sum += coeff;
  return sum;
}

std::string formatLaurent(const LaurentPolynomial& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coeff] : p) {
    long mag = coeff < 0 ? -coeff : coeff;
    if (first)
      os << (coeff < 0 ? "-" : "");
    else
      os << (coeff < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

HfkTable hfk_hat(const CfkComplex& c) {
  auto parts = decompose_differential(c);
  gf2::BitMatrix d00(c.size(), c.size());
  if (auto it = parts.find({0, 0}); it != parts.end()) d00 = it->second;

  std::map<int, std::vector<std::size_t>> byAlexander;
  for (std::size_t i = 0; i < c.size(); ++i) byAlexander[c.generator(i).alexander].push_back(i);

  HfkTable table;
  for (const auto& [a, idx] : byAlexander) {
    gf2::BitMatrix d(idx.size(), idx.size());
    std::vector<int> grading;
    for (std::size_t r = 0; r < idx.size(); ++r) {
      grading.push_back(c.generator(idx[r]).maslov);
      for (std::size_t s = 0; s < idx.size(); ++s)
        if (d00.test(idx[r], idx[s])) d.set(r, s);
    }
    for (const auto& [m, rank] : gradedHomologyRanks(d, grading)) table[{a, m}] = rank;
  }
  return table;
}

int totalRank(const HfkTable& h) {
  int total = 0;
  for (const auto& [key, rank] : h) total += rank;
  return total;
}

std::string formatPoincare(const HfkTable& h) {
  if (h.empty()) return "0";
  auto power = [](const char* var, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, rank] : h) {
    const auto [a, m] = key;
    if (!first) os << " + ";
    first = false;
    std::string mono = power("q", m) + power("t", a);
    if (rank != 1 || mono.empty()) os << rank;
    os << mono;
  }
  return os.str();
}

HfkTable mirrorTable(const HfkTable& h) {
  HfkTable out;
  for (const auto& [key, rank] : h) out[{-key.first, -key.second}] = rank;
  return out;
}

CfkComplex changeBasis(const CfkComplex& c, const gf2::BitMatrix& basis,
                       std::vector<Generator> newGenerators) {
  auto inv = gf2::inverse(basis);
  if (!inv) throw Error(ErrorCode::VerificationFailed, "change of basis is not invertible");
  const auto d = *inv * c.differential() * basis;
  return CfkComplex::fromDifferential(std::move(newGenerators), d);
}

CfkComplex renamed(const CfkComplex& c, const std::vector<std::string>& names) {
  auto gens = c.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i].name = names.at(i);
  return CfkComplex(std::move(gens), c.arrows());
}

CfkComplex shifted(const CfkComplex& c, int alexander, int maslov) {
  auto gens = c.generators();
  for (auto& g : gens) {
    g.alexander += alexander;
    g.maslov += maslov;
  }
  return CfkComplex(std::move(gens), c.arrows());
}

std::vector<std::vector<std::size_t>> arrowComponents(const CfkComplex& c) {
  std::vector<std::size_t> parent(c.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : c.arrows()) parent[root(a.from)] = root(a.to);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < c.size(); ++i) groups[root(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cfk
