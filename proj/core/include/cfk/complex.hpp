#pragma once

// Filtered chain complexes over F2[U, U^-1] with one homogeneous generator per
// basis element. A generator x sits at planar grading (0, A(x)); U^n x sits at
// (-n, A(x) - n) with Maslov grading M(x) - 2n.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cfk/gf2.hpp"

namespace cfk {

struct Generator {
  std::string name;
  int alexander = 0;
  int maslov = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// d(from) contains U^upower * to.
struct Arrow {
  std::size_t from = 0;
  std::size_t to = 0;
  int upower = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct ValidationReport {
  std::vector<std::string> problems;

  bool ok() const noexcept { return problems.empty(); }
  void add(std::string problem) { problems.push_back(std::move(problem)); }
};

class CfkComplex {
 public:
  CfkComplex() = default;
  /// Throws VerificationFailed on out-of-range indices, duplicate arrows or
  /// duplicate generator names. Gradings are not checked here.
  CfkComplex(std::vector<Generator> generators, std::vector<Arrow> arrows);

  /// Builds arrows from a bit matrix (rows = targets, columns = sources); the
  /// U-power of each entry is read off the Maslov gradings.
  static CfkComplex fromDifferential(std::vector<Generator> generators, const gf2::BitMatrix& d);

  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const gf2::BitMatrix& differential() const noexcept { return d_; }

  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws VerificationFailed for unknown names.
  std::size_t indexOf(const std::string& name) const;

  friend bool operator==(const CfkComplex& a, const CfkComplex& b) {
    return a.generators_ == b.generators_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<Generator> generators_;
  std::vector<Arrow> arrows_;
  gf2::BitMatrix d_;
  std::unordered_map<std::string, std::size_t> byName_;
};

enum class Filtration { Filtered, SkewFiltered, Unconstrained };

/// A homogeneous F2[U]-linear map between two complexes, stored as a bit
/// matrix (rows = target generators, columns = source generators). An entry
/// x -> U^n y satisfies M(y) - 2n - M(x) = maslovShift.
struct GradedMap {
  gf2::BitMatrix matrix;
  int maslovShift = 0;
  Filtration kind = Filtration::Filtered;
};

struct MapEntry {
  std::size_t from = 0;
  std::size_t to = 0;
  int upower = 0;
};

/// U-power of an entry from source generator `from` to target `to`, or nullopt
/// when the Maslov parity forbids any entry.
std::optional<int> entryPower(const Generator& from, const Generator& to, int maslovShift);

std::vector<MapEntry> entries(const GradedMap& f, const CfkComplex& source, const CfkComplex& target);

/// Entry x -> U^n y is filtered iff n >= 0 and A(y) - n <= A(x); skew-filtered
/// iff n >= max(-A(x), A(y)).
bool entryAllowed(const Generator& from, const Generator& to, int upower, Filtration kind);

ValidationReport checkMap(const GradedMap& f, const CfkComplex& source, const CfkComplex& target);

/// Filtered chain maps between a complex and a re-based or reduced version of
/// it: `forward` goes old -> new, `backward` new -> old. For a change of basis
/// they are mutually inverse; for a reduction they are the projection and the
/// inclusion of a filtered homotopy equivalence.
struct BasisChange {
  GradedMap forward;
  GradedMap backward;
};

ValidationReport verify_complex(const CfkComplex& c);

/// Homology ranks of a differential over F2 per grading; `d` has rows =
/// targets and columns = sources, and must lower `grading` by one.
std::map<int, int> gradedHomologyRanks(const gf2::BitMatrix& d, const std::vector<int>& grading);

/// Vertical complex C{i=0}: arrows with U-power 0.
gf2::BitMatrix verticalDifferential(const CfkComplex& c);
/// Horizontal complex C{j=0}: arrows that do not drop the Alexander filtration.
gf2::BitMatrix horizontalDifferential(const CfkComplex& c);
std::map<int, int> verticalHomology(const CfkComplex& c);
std::map<int, int> horizontalHomology(const CfkComplex& c);

CfkComplex mirror_dual(const CfkComplex& c);

struct Component {
  int i = 0;
  int j = 0;
  auto operator<=>(const Component&) const = default;
};

std::map<Component, gf2::BitMatrix> decompose_differential(const CfkComplex& c);

/// Laurent polynomial with integer coefficients, exponent -> coefficient.
using LaurentPolynomial = std::map<int, long>;

LaurentPolynomial alexander_polynomial(const CfkComplex& c);
bool isSymmetric(const LaurentPolynomial& p);
long evaluateAtOne(const LaurentPolynomial& p);
std::string formatLaurent(const LaurentPolynomial& p, const std::string& var = "t");

/// Bigraded ranks keyed by (Alexander, Maslov).
using HfkTable = std::map<std::pair<int, int>, int>;

HfkTable hfk_hat(const CfkComplex& c);
int totalRank(const HfkTable& h);
/// Poincare polynomial in q (Maslov) and t (Alexander).
std::string formatPoincare(const HfkTable& h);
HfkTable mirrorTable(const HfkTable& h);

/// Applies an invertible filtered change of basis. Column k of `basis`
/// expresses new generator k in the old basis; `newGenerators` carries the
/// names and gradings of the new basis.
CfkComplex changeBasis(const CfkComplex& c, const gf2::BitMatrix& basis,
                       std::vector<Generator> newGenerators);

/// Same complex with generators renamed.
CfkComplex renamed(const CfkComplex& c, const std::vector<std::string>& names);

/// Generators shifted in Alexander and Maslov grading.
CfkComplex shifted(const CfkComplex& c, int alexander, int maslov);

/// Connected components of the arrow graph, each as sorted generator indices.
std::vector<std::vector<std::size_t>> arrowComponents(const CfkComplex& c);

}  // namespace cfk
