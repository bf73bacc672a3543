#pragma once

// Doubly pointed genus-one Heegaard diagrams of (1,1)-knots, built from a
// parameterization (k, r, c, s).
//
// The torus is cut along beta into an annulus. The 2k+1 intersection points
// sit on beta at positions 0..2k in the order x_0, x_1, ..., x_k, x_-k, ...,
// x_-1, so label l lives at position l mod (2k+1). The left side of beta is
// drawn above it and the right side below it.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cfk/complex.hpp"

namespace cfk {

struct Parameterization {
  int k = 0;
  int r = 0;
  int c = 0;
  int s = 0;

  /// Number of second-family bridges.
  int t() const noexcept { return 2 * (k - r) + 1 - (s < 0 ? -s : s); }
  int pointCount() const noexcept { return 2 * k + 1; }

  friend bool operator==(const Parameterization&, const Parameterization&) = default;
};

std::string to_string(const Parameterization& p);

ValidationReport validate_parameterization(const Parameterization& p);

enum class ArcKind { LoopLeft, LoopRight, BridgeFamily1, BridgeFamily2 };

std::string_view to_string(ArcKind kind) noexcept;

/// An arc of alpha in the annulus. Loops join two points on one side of beta;
/// bridges join `first` on the left side to `second` on the right side. Both
/// endpoints are point labels.
struct AlphaArc {
  ArcKind kind = ArcKind::LoopLeft;
  int first = 0;
  int second = 0;

  friend bool operator==(const AlphaArc&, const AlphaArc&) = default;
};

enum class Side { Left, Right };

/// A region of the annulus adjacent to beta, identified by its side and the
/// beta interval (position, position + 1) it touches.
struct RegionId {
  Side side = Side::Left;
  int afterPosition = 0;

  friend bool operator==(const RegionId&, const RegionId&) = default;
};

/// One step of alpha in the universal cover: from the lifted point `from` on
/// beta line `line`, along `arc`, to the lifted point `to` on `line + dLine`.
struct LiftedStep {
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t line = 0;
  int dLine = 0;
  std::size_t arc = 0;
  Side side = Side::Left;
};

struct OneOneDiagram {
  Parameterization params;
  /// Labels in beta order.
  std::vector<int> points;
  /// Arcs sorted by (kind, smaller endpoint position).
  std::vector<AlphaArc> arcs;
  /// Arc index leaving each position on the left and on the right.
  std::vector<std::size_t> leftArc;
  std::vector<std::size_t> rightArc;
  RegionId w;
  RegionId z;
  /// One period of the lift of alpha through x_0 on line 0, leaving on the
  /// left. The period translates by `periodShift` positions and
  /// `periodLines` beta lines.
  std::vector<LiftedStep> period;
  std::int64_t periodShift = 0;
  int periodLines = 0;

  int pointCount() const noexcept { return static_cast<int>(points.size()); }
  int position(int label) const noexcept;
  int label(int position) const noexcept { return points.at(static_cast<std::size_t>(position)); }
};

/// Throws ParameterizationInvalid, DiagramDisconnected, or DiagramNotS3 when
/// alpha meets beta with algebraic intersection other than +-1.
OneOneDiagram build_diagram(const Parameterization& p);

std::string generatorName(int label);

/// Deterministic text form of a diagram.
std::string serialize(const OneOneDiagram& d);

}  // namespace cfk
