#include "cfk/reduction.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

// A complex in a moving basis. `basis` has the current basis elements as
// columns in original coordinates and `coords` is its inverse.
struct Work {
  std::vector<Generator> gens;
  gf2::BitMatrix d;
  gf2::BitMatrix basis;
  gf2::BitMatrix coords;

  explicit Work(const CfkComplex& c)
      : gens(c.generators()),
        d(c.differential()),
        basis(gf2::BitMatrix::identity(c.size())),
        coords(gf2::BitMatrix::identity(c.size())) {}

  std::size_t size() const { return gens.size(); }

  static void addColumn(gf2::BitMatrix& m, std::size_t dst, std::size_t src) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m.test(r, src)) m.flip(r, dst);
  }

  // Basis element a becomes a + U^n b.
  void addTo(std::size_t a, std::size_t b) {
    addColumn(d, a, b);
    d.row(b) ^= d.row(a);
    addColumn(basis, a, b);
    coords.row(b) ^= coords.row(a);
  }

  std::optional<int> power(std::size_t from, std::size_t to) const {
    return entryPower(gens[from], gens[to], -1);
  }

  bool isVertical(std::size_t from, std::size_t to) const { return power(from, to) == 0; }
  bool isHorizontal(std::size_t from, std::size_t to) const {
    return gens[to].alexander - *power(from, to) == gens[from].alexander;
  }

  CfkComplex complex() const { return CfkComplex::fromDifferential(gens, d); }

  BasisChange change() const {
    return {GradedMap{coords, 0, Filtration::Filtered}, GradedMap{basis, 0, Filtration::Filtered}};
  }
};

enum class Direction { Vertical, Horizontal };

std::pair<CfkComplex, BasisChange> simplifyAlong(const CfkComplex& c, Direction dir) {
  Work w(c);
  const std::size_t n = w.size();
  auto inKind = [&](std::size_t from, std::size_t to) {
    return dir == Direction::Vertical ? w.isVertical(from, to) : w.isHorizontal(from, to);
  };
  auto length = [&](std::size_t from, std::size_t to) {
    return dir == Direction::Vertical ? w.gens[from].alexander - w.gens[to].alexander : *w.power(from, to);
  };

  std::vector<bool> fixed(n, false);
  for (;;) {
    std::optional<std::tuple<int, std::string, std::string, std::size_t, std::size_t>> best;
    for (std::size_t to = 0; to < n; ++to) {
      if (fixed[to]) continue;
      for (auto from : w.d.row(to).ones()) {
        if (fixed[from] || !inKind(from, to)) continue;
        auto key = std::make_tuple(length(from, to), w.gens[from].name, w.gens[to].name, from, to);
        if (!best || key < *best) best = key;
      }
    }
    if (!best) break;
    const auto x = std::get<3>(*best);
    const auto y = std::get<4>(*best);
    // y becomes the whole of d(x) in this direction.
    for (std::size_t v = 0; v < n; ++v)
      if (v != y && w.d.test(v, x) && inKind(x, v)) w.addTo(y, v);
    // Nothing else reaches y in this direction.
    for (auto src : w.d.row(y).ones())
      if (src != x && inKind(src, y)) w.addTo(src, x);
    fixed[x] = fixed[y] = true;
  }

  std::vector<int> in(n, 0);
  std::vector<int> out(n, 0);
  for (std::size_t to = 0; to < n; ++to)
    for (auto from : w.d.row(to).ones())
      if (inKind(from, to)) {
        ++out[from];
        ++in[to];
      }
  std::size_t unpaired = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (in[i] + out[i] > 1) throw Error(ErrorCode::VerificationFailed, "simplified basis is not paired");
    if (in[i] + out[i] == 0) ++unpaired;
  }
  if (unpaired != 1) throw Error(ErrorCode::VerificationFailed, "simplified basis leaves " + std::to_string(unpaired) + " survivors");
  return {w.complex(), w.change()};
}

}  // namespace

std::pair<CfkComplex, BasisChange> vertically_simplified_basis(const CfkComplex& c) {
  return simplifyAlong(c, Direction::Vertical);
}

std::pair<CfkComplex, BasisChange> horizontally_simplified_basis(const CfkComplex& c) {
  return simplifyAlong(c, Direction::Horizontal);
}

BasisChange identityChange(const CfkComplex& c) {
  const auto id = gf2::BitMatrix::identity(c.size());
  return {GradedMap{id, 0, Filtration::Filtered}, GradedMap{id, 0, Filtration::Filtered}};
}

BasisChange compose(const BasisChange& a, const BasisChange& b) {
  return {GradedMap{b.forward.matrix * a.forward.matrix, 0, Filtration::Filtered},
          GradedMap{a.backward.matrix * b.backward.matrix, 0, Filtration::Filtered}};
}

std::pair<CfkComplex, BasisChange> reduce(const CfkComplex& c) {
  std::vector<Generator> gens = c.generators();
  gf2::BitMatrix d = c.differential();
  gf2::BitMatrix forward = gf2::BitMatrix::identity(c.size());
  gf2::BitMatrix backward = forward;

  for (;;) {
    const std::size_t n = gens.size();
    std::optional<std::tuple<std::string, std::string, std::size_t, std::size_t>> best;
    for (std::size_t to = 0; to < n; ++to) {
      for (auto from : d.row(to).ones()) {
        if (gens[from].alexander != gens[to].alexander || gens[from].maslov - 1 != gens[to].maslov) continue;
        auto key = std::make_tuple(gens[from].name, gens[to].name, from, to);
        if (!best || key < *best) best = key;
      }
    }
    if (!best) break;
    const auto x = std::get<2>(*best);
    const auto y = std::get<3>(*best);

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (i != x && i != y) keep.push_back(i);
    const std::size_t m = keep.size();

    // Projection kills x and sends y to the rest of d(x); inclusion sends w
    // to w plus x whenever d(w) hits y.
    gf2::BitMatrix proj(m, n);
    gf2::BitMatrix incl(n, m);
    gf2::BitMatrix next(m, m);
    for (std::size_t r = 0; r < m; ++r) {
      proj.set(r, keep[r]);
      if (d.test(keep[r], x)) proj.set(r, y);
      incl.set(keep[r], r);
      if (d.test(y, keep[r])) incl.set(x, r);
    }
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s)
        if (d.test(keep[r], keep[s]) != (d.test(keep[r], x) && d.test(y, keep[s]))) next.set(r, s);

    std::vector<Generator> kept;
    for (auto i : keep) kept.push_back(gens[i]);
    gens = std::move(kept);
    d = std::move(next);
    forward = proj * forward;
    backward = backward * incl;
  }
  return {CfkComplex::fromDifferential(gens, d),
          BasisChange{GradedMap{forward, 0, Filtration::Filtered}, GradedMap{backward, 0, Filtration::Filtered}}};
}

std::pair<CfkComplex, BasisChange> simplify(const CfkComplex& c) {
  Work w(c);
  const std::size_t n = w.size();
  std::vector<std::pair<std::size_t, std::size_t>> moves;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      auto p = entryPower(w.gens[a], w.gens[b], 0);
      if (p && entryAllowed(w.gens[a], w.gens[b], *p, Filtration::Filtered)) moves.emplace_back(a, b);
    }
  auto arrowCount = [](const Work& x) {
    std::size_t total = 0;
    for (std::size_t r = 0; r < x.size(); ++r) total += x.d.row(r).count();
    return total;
  };

  // Single moves first; when none helps, pairs whose first step may be neutral
  // or worse. The first best move in index order wins.
  for (;;) {
    const auto current = arrowCount(w);
    std::optional<std::pair<std::size_t, std::size_t>> first;
    std::optional<std::pair<std::size_t, std::size_t>> second;
    std::size_t best = current;
    for (const auto& m : moves) {
      Work t = w;
      t.addTo(m.first, m.second);
      if (const auto k = arrowCount(t); k < best) {
        best = k;
        first = m;
      }
    }
    if (!first) {
      for (const auto& m1 : moves) {
        Work t = w;
        t.addTo(m1.first, m1.second);
        for (const auto& m2 : moves) {
          if (m2 == m1) continue;
          Work u = t;
          u.addTo(m2.first, m2.second);
          if (const auto k = arrowCount(u); k < best) {
            best = k;
            first = m1;
            second = m2;
          }
        }
      }
    }
    if (!first) break;
    w.addTo(first->first, first->second);
    if (second) w.addTo(second->first, second->second);
  }
  return {w.complex(), w.change()};
}

std::vector<Summand> classifySummands(const CfkComplex& c) {
  auto isVertical = [&](const Arrow& a) {
    return a.upower == 0 && c.generator(a.to).alexander < c.generator(a.from).alexander;
  };
  auto isHorizontal = [&](const Arrow& a) {
    return a.upower > 0 && c.generator(a.to).alexander - a.upower == c.generator(a.from).alexander;
  };

  std::vector<Summand> out;
  for (auto& members : arrowComponents(c)) {
    Summand s;
    s.generators = members;
    std::vector<Arrow> arrows;
    for (const auto& a : c.arrows())
      if (std::binary_search(members.begin(), members.end(), a.from)) arrows.push_back(a);

    std::vector<int> degree(c.size(), 0);
    for (const auto& a : arrows) {
      ++degree[a.from];
      ++degree[a.to];
    }
    bool pure = std::all_of(arrows.begin(), arrows.end(),
                            [&](const Arrow& a) { return isVertical(a) || isHorizontal(a); });

    if (members.size() == 4 && arrows.size() == 4 && pure) {
      // One source with two outgoing arrows, one sink with two incoming ones.
      std::size_t top = c.size();
      std::size_t bottom = c.size();
      for (auto m : members) {
        int outDeg = 0;
        int inDeg = 0;
        for (const auto& a : arrows) {
          outDeg += a.from == m;
          inDeg += a.to == m;
        }
        if (outDeg == 2 && inDeg == 0) top = m;
        if (inDeg == 2 && outDeg == 0) bottom = m;
      }
      if (top != c.size() && bottom != c.size()) {
        int vertical = 0;
        for (const auto& a : arrows) vertical += isVertical(a);
        if (vertical == 2) s.shape = SummandShape::Box;
      }
    } else if (pure && arrows.size() + 1 == members.size()) {
      bool path = std::all_of(members.begin(), members.end(), [&](std::size_t m) { return degree[m] <= 2; });
      // Along a zig-zag, the two arrows at a generator have different kinds.
      bool alternating = path;
      for (auto m : members) {
        std::vector<bool> kinds;
        for (const auto& a : arrows)
          if (a.from == m || a.to == m) kinds.push_back(isVertical(a));
        if (kinds.size() == 2 && kinds[0] == kinds[1]) alternating = false;
      }
      if (alternating) s.shape = SummandShape::Staircase;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cfk
