#pragma once

#include <utility>

#include "cfk/complex.hpp"

namespace cfk {

/// Filtered change of basis after which every vertical arrow (U-power 0)
/// pairs two basis elements and exactly one basis element is left unpaired.
/// Basis elements keep the name and gradings of their leading generator.
std::pair<CfkComplex, BasisChange> vertically_simplified_basis(const CfkComplex& c);

/// Horizontal counterpart: pairs along arrows that keep the Alexander
/// filtration level of U^n times the target equal to the source.
std::pair<CfkComplex, BasisChange> horizontally_simplified_basis(const CfkComplex& c);

/// Cancels every arrow with U-power 0 between generators of equal Alexander
/// grading, smallest (from, to) names first, until none is left.
std::pair<CfkComplex, BasisChange> reduce(const CfkComplex& c);

/// Greedy search for a filtered basis with few arrows: repeatedly applies the
/// elementary change x -> x + U^n y that removes the most arrows, or the best
/// pair of them when no single change helps. Used to split complexes into
/// staircase and box summands.
std::pair<CfkComplex, BasisChange> simplify(const CfkComplex& c);

/// Composition: first `a` (C -> C'), then `b` (C' -> C'').
BasisChange compose(const BasisChange& a, const BasisChange& b);
BasisChange identityChange(const CfkComplex& c);

enum class SummandShape { Staircase, Box, Other };

struct Summand {
  SummandShape shape = SummandShape::Other;
  std::vector<std::size_t> generators;
};

/// Arrow-graph components with a shape label. A box is four generators
/// a -> b, a -> c, b -> e, c -> e with one horizontal and one vertical arrow
/// on each side; a staircase is a zig-zag path of alternating horizontal and
/// vertical arrows.
std::vector<Summand> classifySummands(const CfkComplex& c);

}  // namespace cfk
