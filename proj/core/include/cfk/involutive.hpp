#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cfk/complex.hpp"
#include "cfk/homology.hpp"
#include "cfk/involution.hpp"

namespace cfk {

/// AI_0^- = Cone(Q(iota + Id)) over the A_0^- basis. Indices [0, half) are the
/// plain copy at Maslov grading M + 1, [half, 2 half) the Q-copy at M, where M
/// is the grading in A_0^-.
struct ConeComplex {
  FreeGradedComplex complex;
  std::size_t half = 0;
  /// Q-action: plain generator i to Q-copy i.
  gf2::BitMatrix q;
};

ConeComplex build_ai0_minus(const CfkComplex& c, const GradedMap& iota);

/// Whether a homogeneous element of the cone is Q times a cycle, up to a
/// boundary.
bool inImageOfQ(const ConeComplex& cone, const HomogeneousElement& element);

struct TowerReport {
  HomogeneousElement notImQTower;
  int r1 = 0;
  HomogeneousElement eventuallyImQTower;
  int r2 = 0;
  std::vector<TorsionSummand> extras;
};

TowerReport classifyTowers(const ConeComplex& cone);

struct InvolutiveValues {
  int vUnder = 0;
  int vOver = 0;
  TowerReport towers;
  /// (V_0 under, V_0 over) for each class of iota, in class order.
  std::vector<std::pair<int, int>> perClass;

  bool classesAgree() const;
};

/// Values from the first class; every class is computed and kept.
InvolutiveValues compute_involutive_v0s(const CfkComplex& c, const IotaSolutionSet& solutions);
std::pair<int, int> involutiveV0s(const CfkComplex& c, const GradedMap& iota, TowerReport* report = nullptr);

}  // namespace cfk
