#include "cfk/floer.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

std::int64_t floorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t n) { return a - floorDiv(a, n) * n; }

struct Point {
  std::int64_t x;
  std::int64_t y;
};

// Integer drawing of the lifted diagram. Point position p sits at x = 4p on
// beta line n at y = n * height. Loops of span m rise (or sink) to height 2m;
// bridges run vertically to `inset`, diagonally across the strip, and
// vertically into the next line. Basepoint lifts and the quadrant probes
// around corners sit at odd coordinates, so they never touch the curves.
struct Geometry {
  std::int64_t n;
  std::int64_t height;
  std::int64_t inset;
  std::int64_t wx;
  std::int64_t zx;

  explicit Geometry(const OneOneDiagram& d)
      : n(d.pointCount()),
        height(8 * n + 16),
        inset(2 * n + 4),
        wx(4 * (d.params.c + d.params.k) + 2),
        zx(4 * (-d.params.c - d.params.k - 1) + 2) {}
};

struct Domain {
  std::vector<Point> boundary;
  // Signed half turns of alpha along the boundary; the Euler measure of the
  // domain is halfTurns / 2.
  int halfTurns = 0;
};

LiftedStep translated(const OneOneDiagram& d, std::int64_t param) {
  const auto n = static_cast<std::int64_t>(d.period.size());
  const std::int64_t q = floorDiv(param, n);
  LiftedStep step = d.period[static_cast<std::size_t>(param - q * n)];
  step.from += q * d.periodShift;
  step.to += q * d.periodShift;
  step.line += q * d.periodLines;
  return step;
}

// Boundary of the domain whose alpha edge runs along the lift of alpha from
// `a` to `b` (a.param < b.param) and whose beta edge runs back along the line.
Domain buildDomain(const OneOneDiagram& d, const Geometry& g, const LineCrossing& a, const LineCrossing& b) {
  Domain dom;
  dom.boundary.reserve(static_cast<std::size_t>(3 * (b.param - a.param) + 1));
  const auto line0 = translated(d, a.param).line;
  dom.boundary.push_back({4 * a.position, line0 * g.height});
  for (std::int64_t t = a.param; t < b.param; ++t) {
    const auto s = translated(d, t);
    const std::int64_t y = s.line * g.height;
    const std::int64_t x0 = 4 * s.from;
    const std::int64_t x1 = 4 * s.to;
    const std::int64_t span = s.to > s.from ? s.to - s.from : s.from - s.to;
    if (s.dLine == 0) {
      const std::int64_t top = s.side == Side::Left ? y + 2 * span : y - 2 * span;
      dom.boundary.push_back({x0, top});
      dom.boundary.push_back({x1, top});
      dom.boundary.push_back({x1, y});
      // Left loops bulge upward: moving right turns clockwise.
      const bool rightward = s.to > s.from;
      dom.halfTurns += (s.side == Side::Left) == rightward ? -1 : 1;
    } else {
      const std::int64_t dir = s.dLine;
      dom.boundary.push_back({x0, y + dir * g.inset});
      dom.boundary.push_back({x1, y + dir * (g.height - g.inset)});
      dom.boundary.push_back({x1, y + dir * g.height});
    }
  }
  return dom;
}

int winding(const std::vector<Point>& poly, std::int64_t qx, std::int64_t qy) {
  int w = 0;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p1 = poly[i];
    const auto& p2 = poly[(i + 1) % m];
    if ((p1.y < qy) == (p2.y < qy)) continue;
    // Crossing x compared with qx: sign of (x1 - qx)(y2 - y1) + (qy - y1)(x2 - x1).
    const std::int64_t dy = p2.y - p1.y;
    const std::int64_t num = (p1.x - qx) * dy + (qy - p1.y) * (p2.x - p1.x);
    const bool right = dy > 0 ? num > 0 : num < 0;
    if (right) w += dy > 0 ? 1 : -1;
  }
  return w;
}

// Sum of the winding numbers at all lifts (x0 + 4Nm, rowY) of a basepoint.
std::int64_t rowBasepointSum(const std::vector<Point>& poly, std::int64_t rowY, std::int64_t x0,
                             std::int64_t period) {
  std::int64_t total = 0;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p1 = poly[i];
    const auto& p2 = poly[(i + 1) % m];
    if ((p1.y < rowY) == (p2.y < rowY)) continue;
    if (p1.x != p2.x) throw std::logic_error("basepoint row crosses a non-vertical edge");
    const int dir = p2.y > p1.y ? 1 : -1;
    total += dir * floorDiv(p1.x - x0 - 1, period);
  }
  return total;
}

struct DomainCounts {
  int fourMaslov = 0;
  std::int64_t nw = 0;
  std::int64_t nz = 0;
  std::array<int, 4> cornerA{};
  std::array<int, 4> cornerB{};
};

std::array<int, 4> quadrants(const std::vector<Point>& poly, std::int64_t x, std::int64_t y) {
  return {winding(poly, x + 1, y + 1), winding(poly, x - 1, y + 1), winding(poly, x - 1, y - 1),
          winding(poly, x + 1, y - 1)};
}

DomainCounts measure(const OneOneDiagram& d, const Geometry& g, const LineCrossing& a,
                     const LineCrossing& b) {
  const Domain dom = buildDomain(d, g, a, b);
  DomainCounts out;
  const std::int64_t y0 = dom.boundary.front().y;
  out.cornerA = quadrants(dom.boundary, 4 * a.position, y0);
  out.cornerB = quadrants(dom.boundary, 4 * b.position, y0);
  int corners = 0;
  for (int v : out.cornerA) corners += v;
  for (int v : out.cornerB) corners += v;
  out.fourMaslov = 2 * dom.halfTurns + corners;

  std::int64_t minY = y0;
  std::int64_t maxY = y0;
  for (const auto& p : dom.boundary) {
    minY = std::min(minY, p.y);
    maxY = std::max(maxY, p.y);
  }
  const std::int64_t period = 4 * g.n;
  for (std::int64_t line = floorDiv(minY, g.height) - 1; line <= floorDiv(maxY, g.height) + 1; ++line) {
    out.nw += rowBasepointSum(dom.boundary, line * g.height + 1, g.wx, period);
    out.nz += rowBasepointSum(dom.boundary, line * g.height + g.height - 1, g.zx, period);
  }
  return out;
}

RelativeGrading gradingFromCounts(const DomainCounts& c) {
  if (c.fourMaslov % 4 != 0) throw Error(ErrorCode::GradingInconsistent, "non-integral Maslov index");
  RelativeGrading r;
  r.maslov = c.fourMaslov / 4 - 2 * static_cast<int>(c.nw);
  r.alexander = static_cast<int>(c.nz - c.nw);
  return r;
}

const LineCrossing& crossingFor(const std::vector<LineCrossing>& crossings, int label) {
  for (const auto& c : crossings)
    if (c.label == label) return c;
  throw Error(ErrorCode::VerificationFailed, "no intersection point " + generatorName(label));
}

RelativeGrading relativeOnLine(const OneOneDiagram& d, const Geometry& g,
                               const std::vector<LineCrossing>& crossings, int fromLabel, int toLabel) {
  if (fromLabel == toLabel) return {};
  const auto& a = crossingFor(crossings, fromLabel);
  const auto& b = crossingFor(crossings, toLabel);
  if (a.param < b.param) return gradingFromCounts(measure(d, g, a, b));
  auto r = gradingFromCounts(measure(d, g, b, a));
  return {-r.maslov, -r.alexander};
}

int nonzeroCount(const std::array<int, 4>& q, int& value) {
  int count = 0;
  for (int v : q) {
    if (v != 0) {
      ++count;
      value = v;
    }
  }
  return count;
}

}  // namespace

std::vector<LineCrossing> lineCrossings(const OneOneDiagram& d, std::int64_t line) {
  const auto n = static_cast<std::int64_t>(d.period.size());
  if (n != d.pointCount() || (d.periodLines != 1 && d.periodLines != -1))
    throw Error(ErrorCode::WindowExhausted, "lifted alpha does not close up after one period");
  std::vector<LineCrossing> out;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::int64_t v = 0; v < n; ++v) {
    const auto& step = d.period[static_cast<std::size_t>(v)];
    const std::int64_t q = (line - step.line) * d.periodLines;
    const std::int64_t position = step.from + q * d.periodShift;
    const int pos = static_cast<int>(mod(position, n));
    if (seen[static_cast<std::size_t>(pos)])
      throw Error(ErrorCode::WindowExhausted, "lifted alpha meets a beta line twice at one point");
    seen[static_cast<std::size_t>(pos)] = true;
    out.push_back({d.label(pos), v + q * n, position});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.param < b.param; });
  return out;
}

std::vector<Bigon> enumerate_bigons(const OneOneDiagram& d, std::int64_t line) {
  const Geometry g(d);
  const auto crossings = lineCrossings(d, line);
  std::vector<Bigon> out;
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    for (std::size_t j = i + 1; j < crossings.size(); ++j) {
      const auto& a = crossings[i];
      const auto& b = crossings[j];
      const std::int64_t lo = std::min(a.position, b.position);
      const std::int64_t hi = std::max(a.position, b.position);
      // The alpha arc must not return to the open beta segment between the corners.
      bool simple = true;
      for (std::size_t m = i + 1; m < j && simple; ++m)
        if (crossings[m].position > lo && crossings[m].position < hi) simple = false;
      if (!simple) continue;

      const auto counts = measure(d, g, a, b);
      int signA = 0;
      int signB = 0;
      if (nonzeroCount(counts.cornerA, signA) != 1 || nonzeroCount(counts.cornerB, signB) != 1) continue;
      if (signA != signB || (signA != 1 && signA != -1))
        throw Error(ErrorCode::GradingInconsistent, "bigon boundary is not a simple closed curve");
      const auto nw = counts.nw * signA;
      const auto nz = counts.nz * signA;
      if (nw < 0 || nz < 0)
        throw Error(ErrorCode::GradingInconsistent, "bigon with negative basepoint multiplicity");
      // A positively oriented boundary runs along alpha from the source corner.
      Bigon bigon;
      bigon.fromLabel = signA > 0 ? a.label : b.label;
      bigon.toLabel = signA > 0 ? b.label : a.label;
      bigon.wCount = static_cast<int>(nw);
      bigon.zCount = static_cast<int>(nz);
      out.push_back(bigon);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Bigon& x, const Bigon& y) {
    return std::tuple(d.position(x.fromLabel), d.position(x.toLabel), x.wCount, x.zCount) <
           std::tuple(d.position(y.fromLabel), d.position(y.toLabel), y.wCount, y.zCount);
  });
  return out;
}

RelativeGrading relativeGrading(const OneOneDiagram& d, int fromLabel, int toLabel) {
  const Geometry g(d);
  return relativeOnLine(d, g, lineCrossings(d), fromLabel, toLabel);
}

CfkComplex assemble_cfk(const OneOneDiagram& d, const std::vector<Bigon>& bigons) {
  const Geometry g(d);
  const auto crossings = lineCrossings(d);
  const int n = d.pointCount();
  const int ref = d.label(0);

  std::vector<Generator> gens;
  for (int pos = 0; pos < n; ++pos) {
    const auto rel = relativeOnLine(d, g, crossings, ref, d.label(pos));
    gens.push_back({generatorName(d.label(pos)), -rel.alexander, -rel.maslov});
  }

  std::map<std::pair<std::size_t, std::size_t>, int> parity;
  for (const auto& b : bigons) {
    const auto from = static_cast<std::size_t>(d.position(b.fromLabel));
    const auto to = static_cast<std::size_t>(d.position(b.toLabel));
    const auto& x = gens[from];
    const auto& y = gens[to];
    if (x.maslov - 1 != y.maslov - 2 * b.wCount || x.alexander - y.alexander != b.zCount - b.wCount)
      throw Error(ErrorCode::GradingInconsistent, to_string(d.params) + ": bigon " + b.fromGen() + " -> " +
                                                       b.toGen() + " disagrees with the domain gradings");
    parity[{from, to}] ^= 1;
  }
  gf2::BitMatrix dm(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const auto& [key, odd] : parity)
    if (odd) dm.set(key.second, key.first);
  if (!(dm * dm).isZero())
    throw Error(ErrorCode::DSquaredNonzero, to_string(d.params) + ": bigon differential squares to a nonzero map");

  CfkComplex raw = CfkComplex::fromDifferential(gens, dm);

  const auto delta = alexander_polynomial(raw);
  if (delta.empty())
    throw Error(ErrorCode::GradingInconsistent, to_string(d.params) + ": Alexander polynomial vanishes");
  const int lo = delta.begin()->first;
  const int hi = delta.rbegin()->first;
  if ((lo + hi) % 2 != 0)
    throw Error(ErrorCode::GradingInconsistent, to_string(d.params) + ": Alexander polynomial has no centre");
  const int aShift = -(lo + hi) / 2;

  const auto vert = verticalHomology(raw);
  if (vert.size() != 1 || vert.begin()->second != 1)
    throw Error(ErrorCode::GradingInconsistent, to_string(d.params) + ": vertical homology is not rank one");
  const int mShift = -vert.begin()->first;

  CfkComplex out = shifted(raw, aShift, mShift);
  if (!isSymmetric(alexander_polynomial(out)))
    throw Error(ErrorCode::GradingInconsistent, to_string(d.params) + ": Alexander polynomial is not symmetric");
  return out;
}

CfkComplex complexFromParameterization(const Parameterization& p) {
  const auto d = build_diagram(p);
  return assemble_cfk(d, enumerate_bigons(d));
}

}  // namespace cfk
