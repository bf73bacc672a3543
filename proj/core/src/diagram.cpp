#include "cfk/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

std::int64_t floorDiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t n) { return a - floorDiv(a, n) * n; }

// Lifted layout of the arcs. In the base period the left side of beta reads,
// from left to right, the bridge block [lb0, lb0 + B) followed by the 2r loop
// endpoints nested around c + k + 1/2; the right side reads the loop endpoints
// nested around -c - k - 1/2 followed by the bridge block [rb0, rb0 + B).
struct Layout {
  std::int64_t n;
  std::int64_t r;
  std::int64_t absS;
  std::int64_t t;
  std::int64_t blockSize;
  std::int64_t lb0;
  std::int64_t rb0;
  std::int64_t leftLoop0;
  std::int64_t rightLoop0;
  std::int64_t leftCenter2;   // twice the centre of the left loops
  std::int64_t rightCenter2;  // twice the centre of the right loops

  explicit Layout(const Parameterization& p)
      : n(p.pointCount()),
        r(p.r),
        absS(p.s < 0 ? -p.s : p.s),
        t(p.t()),
        blockSize(2 * (p.k - p.r) + 1),
        lb0(p.c - p.k + p.r),
        rb0(-p.c - p.k + p.r),
        leftLoop0(p.c + p.k - p.r + 1),
        rightLoop0(-p.c - p.k - p.r),
        leftCenter2(2 * (p.c + p.k) + 1),
        rightCenter2(-2 * (p.c + p.k) - 1) {}

  // Top offset (relative to rb0) of the bridge leaving left-block offset u.
  std::int64_t bridgeTop(std::int64_t u) const { return u < absS ? t + u : n + (u - absS); }

  LiftedStep leftArc(std::int64_t x, std::int64_t line) const {
    LiftedStep step{x, 0, line, 0, 0, Side::Left};
    const std::int64_t m = floorDiv(x - lb0, n);
    const std::int64_t u = x - lb0 - m * n;
    if (u < blockSize) {
      step.to = rb0 + bridgeTop(u) + m * n;
      step.dLine = 1;
    } else {
      const std::int64_t base = x - floorDiv(x - leftLoop0, n) * n;
      step.to = x + (leftCenter2 - 2 * base);
    }
    return step;
  }

  LiftedStep rightArc(std::int64_t x, std::int64_t line) const {
    LiftedStep step{x, 0, line, 0, 0, Side::Right};
    const std::int64_t w = mod(x - rb0, n);
    if (w < blockSize) {
      std::int64_t u = 0;
      std::int64_t top = 0;
      if (w >= t) {
        u = w - t;
        top = t + u;
      } else {
        u = absS + w;
        top = n + w;
      }
      const std::int64_t m = floorDiv(x - rb0 - top, n);
      step.to = lb0 + u + m * n;
      step.dLine = -1;
    } else {
      const std::int64_t base = x - floorDiv(x - rightLoop0, n) * n;
      step.to = x + (rightCenter2 - 2 * base);
    }
    return step;
  }
};

}  // namespace

std::string to_string(const Parameterization& p) {
  std::ostringstream os;
  os << "(" << p.k << "," << p.r << "," << p.c << "," << p.s << ")";
  return os.str();
}

std::string_view to_string(ArcKind kind) noexcept {
  switch (kind) {
    case ArcKind::LoopLeft: return "loop-left";
    case ArcKind::LoopRight: return "loop-right";
    case ArcKind::BridgeFamily1: return "bridge-family-1";
    case ArcKind::BridgeFamily2: return "bridge-family-2";
  }
  return "unknown";
}

ValidationReport validate_parameterization(const Parameterization& p) {
  ValidationReport report;
  if (p.k < 0) report.add("k must be nonnegative");
  if (p.r < 0) report.add("r must be nonnegative");
  if (p.r > p.k) report.add("r > k: loop indices k-r < i <= k would include nonpositive i");
  if (p.t() < 0) report.add("t = 2(k-r)+1-|s| is negative");
  return report;
}

int OneOneDiagram::position(int label) const noexcept {
  return static_cast<int>(mod(label, pointCount()));
}

std::string generatorName(int label) { return "x" + std::to_string(label); }

OneOneDiagram build_diagram(const Parameterization& p) {
  if (auto report = validate_parameterization(p); !report.ok()) {
    std::string msg = to_string(p);
    for (const auto& problem : report.problems) msg += "; " + problem;
    throw Error(ErrorCode::ParameterizationInvalid, msg);
  }

  OneOneDiagram d;
  d.params = p;
  const int n = p.pointCount();
  for (int pos = 0; pos < n; ++pos) d.points.push_back(pos <= p.k ? pos : pos - n);

  auto pos = [n](std::int64_t label) { return static_cast<int>(mod(label, n)); };
  auto arc = [&](ArcKind kind, int a, int b) {
    if (kind == ArcKind::LoopLeft || kind == ArcKind::LoopRight) {
      if (pos(a) > pos(b)) std::swap(a, b);
    }
    d.arcs.push_back({kind, d.label(pos(a)), d.label(pos(b))});
  };

  const int absS = p.s < 0 ? -p.s : p.s;
  const int t = p.t();
  for (int i = p.k - p.r + 1; i <= p.k; ++i) arc(ArcKind::LoopLeft, p.c - i, p.c + i);
  for (int i = p.k - p.r + 1; i <= p.k; ++i) arc(ArcKind::LoopRight, -p.c + i, -p.c - i);
  for (int u = 0; u < absS; ++u) {
    const int i = p.c - p.k + p.r + u;
    arc(ArcKind::BridgeFamily1, i, i - (2 * (p.c - p.k + p.r) + absS - 1));
  }
  for (int v = 0; v < t; ++v) {
    const int i = p.c + p.k - p.r - t + 1 + v;
    arc(ArcKind::BridgeFamily2, i, i - (2 * (p.c + p.k - p.r) - t + 1));
  }
  std::sort(d.arcs.begin(), d.arcs.end(), [&](const AlphaArc& a, const AlphaArc& b) {
    const int ka = static_cast<int>(a.kind);
    const int kb = static_cast<int>(b.kind);
    if (ka != kb) return ka < kb;
    return std::min(pos(a.first), pos(a.second)) < std::min(pos(b.first), pos(b.second));
  });

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  d.leftArc.assign(static_cast<std::size_t>(n), kNone);
  d.rightArc.assign(static_cast<std::size_t>(n), kNone);
  auto attach = [&](std::vector<std::size_t>& slots, int label, std::size_t index) {
    auto& slot = slots[static_cast<std::size_t>(pos(label))];
    if (slot != kNone)
      throw Error(ErrorCode::DiagramDisconnected,
                  to_string(p) + ": two arcs share an endpoint at " + generatorName(label));
    slot = index;
  };
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    const auto& arcRef = d.arcs[a];
    switch (arcRef.kind) {
      case ArcKind::LoopLeft:
        attach(d.leftArc, arcRef.first, a);
        attach(d.leftArc, arcRef.second, a);
        break;
      case ArcKind::LoopRight:
        attach(d.rightArc, arcRef.first, a);
        attach(d.rightArc, arcRef.second, a);
        break;
      default:
        attach(d.leftArc, arcRef.first, a);
        attach(d.rightArc, arcRef.second, a);
    }
  }
  for (int q = 0; q < n; ++q) {
    if (d.leftArc[static_cast<std::size_t>(q)] == kNone || d.rightArc[static_cast<std::size_t>(q)] == kNone)
      throw Error(ErrorCode::DiagramDisconnected,
                  to_string(p) + ": arc matching is not perfect at " + generatorName(d.label(q)));
  }

  d.w = {Side::Left, pos(p.c + p.k)};
  d.z = {Side::Right, pos(-p.c - p.k - 1)};

  // Follow alpha from x_0, leaving on the left. Arriving at a point from below
  // continues on the left side, arriving from above continues on the right.
  const Layout layout(p);
  std::int64_t x = 0;
  std::int64_t line = 0;
  Side next = Side::Left;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (;;) {
    const int q = pos(x);
    if (seen[static_cast<std::size_t>(q)]) {
      if (q != 0 || next != Side::Left)
        throw Error(ErrorCode::DiagramDisconnected, to_string(p) + ": alpha revisits a point");
      break;
    }
    seen[static_cast<std::size_t>(q)] = true;
    LiftedStep step = next == Side::Left ? layout.leftArc(x, line) : layout.rightArc(x, line);
    step.arc = next == Side::Left ? d.leftArc[static_cast<std::size_t>(q)]
                                  : d.rightArc[static_cast<std::size_t>(q)];
    d.period.push_back(step);
    x = step.to;
    line += step.dLine;
    // A loop returns from the side it left on; a bridge passes through beta.
    if (step.dLine == 0) next = next == Side::Left ? Side::Right : Side::Left;
  }
  if (static_cast<int>(d.period.size()) != n)
    throw Error(ErrorCode::DiagramDisconnected,
                to_string(p) + ": alpha closes up after " + std::to_string(d.period.size()) + " of " +
                    std::to_string(n) + " intersection points");
  d.periodShift = x;
  d.periodLines = static_cast<int>(line);
  if (line != 1 && line != -1)
    throw Error(ErrorCode::DiagramNotS3, to_string(p) + ": alpha meets beta algebraically " +
                                             std::to_string(line) + " times");
  return d;
}

std::string serialize(const OneOneDiagram& d) {
  std::ostringstream os;
  os << "params " << d.params.k << ' ' << d.params.r << ' ' << d.params.c << ' ' << d.params.s << '\n';
  os << "points";
  for (int label : d.points) os << ' ' << label;
  os << '\n';
  for (const auto& a : d.arcs) os << "arc " << to_string(a.kind) << ' ' << a.first << ' ' << a.second << '\n';
  auto region = [](const RegionId& r) {
    return std::string(r.side == Side::Left ? "left " : "right ") + std::to_string(r.afterPosition);
  };
  os << "w " << region(d.w) << '\n';
  os << "z " << region(d.z) << '\n';
  return os.str();
}

}  // namespace cfk
