#pragma once

// Homology of finitely generated free graded complexes over F2[U], where U
// has degree -2 and every generator is homogeneous. An entry x -> U^e y of the
// differential has e = (M(y) - M(x) + 1) / 2, which must be nonnegative.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cfk/complex.hpp"
#include "cfk/gf2.hpp"

namespace cfk {

struct FreeGradedComplex {
  std::vector<std::string> names;
  std::vector<int> maslov;
  /// Rows are targets, columns are sources.
  gf2::BitMatrix d;

  std::size_t size() const noexcept { return names.size(); }
};

ValidationReport checkFreeComplex(const FreeGradedComplex& f);

/// The element sum over `support` of U^((M(g) - grading) / 2) g.
struct HomogeneousElement {
  gf2::BitVector support;
  int grading = 0;
};

struct TorsionSummand {
  HomogeneousElement representative;
  int order = 0;
};

/// A cancelling pair of the final basis: d(source) = U^exponent target.
struct SnfPair {
  std::size_t source = 0;
  std::size_t target = 0;
  int exponent = 0;
};

struct ModuleDecomposition {
  std::vector<HomogeneousElement> towers;
  std::vector<TorsionSummand> torsion;

  /// Final basis: columns in original coordinates, and its inverse.
  gf2::BitMatrix basis;
  gf2::BitMatrix coords;
  std::vector<int> grading;
  std::vector<std::size_t> towerBasis;
  std::vector<SnfPair> pairs;
};

ModuleDecomposition snf_homology(const FreeGradedComplex& f);

/// Homology class of a homogeneous cycle in the decomposition's generators:
/// tower coefficients, then torsion coefficients (nonzero only below the
/// torsion order). Throws VerificationFailed if the element is not a cycle.
struct HomologyClass {
  gf2::BitVector towers;
  gf2::BitVector torsion;

  bool isZero() const { return towers.none() && torsion.none(); }
};
HomologyClass classOf(const ModuleDecomposition& m, const HomogeneousElement& cycle);

/// Free basis U^max(0, A(x)) x of the subcomplex i <= 0, j <= 0.
FreeGradedComplex build_a0_minus(const CfkComplex& c);

/// -1/2 times the grading of the free tower of H(A_0^-).
int compute_v0(const CfkComplex& c);

/// Ranks of the homology of C / U^n per grading, computed directly.
std::map<int, int> truncatedHomology(const FreeGradedComplex& f, int n);
/// The same ranks predicted from a decomposition.
std::map<int, int> predictedTruncatedHomology(const ModuleDecomposition& m, int n);

}  // namespace cfk
