#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cfk/complex.hpp"
#include "cfk/gf2.hpp"

namespace cfk {

/// Phi: components of the differential with i odd; Psi: components with j
/// odd. On a complex without diagonal arrows these are the odd horizontal and
/// odd vertical parts.
std::pair<GradedMap, GradedMap> phi_psi(const CfkComplex& c);

/// Id + U^-1 (Phi o Psi).
GradedMap sarkar_map(const CfkComplex& c);

/// Maps C -> C of the given Maslov shift whose every entry respects `kind`.
std::vector<MapEntry> allowedEntries(const CfkComplex& c, int maslovShift, Filtration kind);

/// df + fd, of Maslov shift f.maslovShift - 1.
GradedMap commutator(const CfkComplex& c, const GradedMap& f);

/// Span of dH + Hd over all H of Maslov shift +1 with entries of `kind`,
/// as flattened matrices.
gf2::EchelonBasis homotopyImage(const CfkComplex& c, Filtration kind);

/// Some H with f + g = dH + Hd, H of Maslov shift f.maslovShift + 1 and of the
/// given kind, or nullopt when none exists.
std::optional<GradedMap> maps_homotopic(const CfkComplex& c, const GradedMap& f, const GradedMap& g,
                                        Filtration kind);

struct IotaSolutionSet {
  /// Skew-filtered Maslov-preserving chain maps: particular + span(kernel).
  /// The chain-map system is homogeneous, so the particular solution is zero.
  GradedMap particular;
  std::vector<GradedMap> kernel;
  /// Directions left after dividing out skew-filtered null-homotopic maps.
  std::size_t quotientDimension = 0;
  /// Candidates that are invertible with iota^2 + sigma filtered null-homotopic.
  /// At most kIotaStoredClasses are kept, a seeded uniform sample when more exist.
  std::vector<GradedMap> validated;
  /// Partition of `validated` by skew-filtered homotopy, as indices.
  std::vector<std::vector<std::size_t>> equivalenceClasses;
  /// Number of homotopy classes passing validation, stored or not.
  std::size_t validatedTotal = 0;
  /// False when `validated` is a sample or the search hit its node budget.
  bool exhaustive = true;
};

inline constexpr std::size_t kIotaDirectionLimit = 64;
inline constexpr std::size_t kIotaNodeBudget = std::size_t{1} << 27;
inline constexpr std::size_t kIotaStoredClasses = 256;

/// Every candidate for iota_K up to skew-filtered homotopy. The condition
/// iota^2 = sigma is quadratic in the free coefficients; the search assigns
/// them one at a time and checks each equation once its variables are set.
/// Throws SolutionSpaceTooLarge above kIotaDirectionLimit directions or when
/// the node budget runs out with nothing validated, NoSolution when the
/// search completes empty.
IotaSolutionSet solve_iota(const CfkComplex& c);

/// A filtered, Maslov-preserving chain automorphism f with
/// f iota + iota' f skew-filtered null-homotopic, so that iota and iota' agree
/// after a change of basis. The search is exhaustive over up to 2^16 maps and
/// randomized (fixed seed) beyond that, so nullopt is not a proof.
std::optional<GradedMap> conjugating_map(const CfkComplex& c, const GradedMap& iota, const GradedMap& iotaPrime);

/// Groups the homotopy classes of `solutions` (as class indices) by
/// conjugating_map against each group's first member.
std::vector<std::vector<std::size_t>> classesUpToBasisChange(const CfkComplex& c, const IotaSolutionSet& solutions);

/// Checks one map against the defining properties; problems are listed.
ValidationReport validateIota(const CfkComplex& c, const GradedMap& iota);

/// The map induced on mirror_dual(c).
GradedMap dualMap(const GradedMap& f);

/// forward o f o backward, the map seen in the new basis.
GradedMap transport(const GradedMap& f, const BasisChange& change);

}  // namespace cfk
