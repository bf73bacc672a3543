#pragma once

// Bigon counting for (1,1) diagrams and assembly of CFK^infty.
//
// Work happens in the universal cover of the torus. The lift of alpha through
// x_0 is invariant under one deck translation and meets every beta line in
// exactly one lift of each intersection point, so every bigon is, up to deck
// translation, bounded by that lift and a segment of beta line 0.

#include <cstdint>
#include <string>
#include <vector>

#include "cfk/complex.hpp"
#include "cfk/diagram.hpp"

namespace cfk {

struct Bigon {
  int fromLabel = 0;
  int toLabel = 0;
  int wCount = 0;
  int zCount = 0;

  std::string fromGen() const { return generatorName(fromLabel); }
  std::string toGen() const { return generatorName(toLabel); }

  friend bool operator==(const Bigon&, const Bigon&) = default;
};

/// A point where the lift of alpha crosses a beta line. `param` counts
/// intersection points passed along alpha from the base point.
struct LineCrossing {
  int label = 0;
  std::int64_t param = 0;
  std::int64_t position = 0;
};

/// Crossings of the lifted alpha with beta line `line`, sorted by param.
/// Throws WindowExhausted unless there is exactly one per intersection point.
std::vector<LineCrossing> lineCrossings(const OneOneDiagram& d, std::int64_t line = 0);

/// Every embedded bigon with convex corners, up to deck translation, sorted by
/// (from, to). `line` picks the beta line used as reference; the result does
/// not depend on it.
std::vector<Bigon> enumerate_bigons(const OneOneDiagram& d, std::int64_t line = 0);

/// Relative gradings of the domain from x to y (any two intersection points):
/// M(x) - M(y), A(x) - A(y).
struct RelativeGrading {
  int maslov = 0;
  int alexander = 0;
};
RelativeGrading relativeGrading(const OneOneDiagram& d, int fromLabel, int toLabel);

/// One generator per intersection point in beta order, arrows from bigons,
/// gradings from domains, normalized so the Alexander polynomial is symmetric
/// and the vertical homology sits in Maslov grading 0.
CfkComplex assemble_cfk(const OneOneDiagram& d, const std::vector<Bigon>& bigons);

/// build_diagram, enumerate_bigons and assemble_cfk in one go.
CfkComplex complexFromParameterization(const Parameterization& p);

}  // namespace cfk
