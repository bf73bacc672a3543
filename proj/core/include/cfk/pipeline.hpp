#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfk/complex.hpp"
#include "cfk/involution.hpp"
#include "cfk/knot_table.hpp"

namespace cfk {

struct InvariantTriple {
  int V0 = 0;
  int V0under = 0;
  int V0over = 0;

  friend bool operator==(const InvariantTriple&, const InvariantTriple&) = default;
};

struct Timings {
  double complexMs = 0;
  double iotaMs = 0;
  double invariantsMs = 0;

  friend bool operator==(const Timings&, const Timings&) = default;
};

struct KnotResult {
  std::string name;
  InvariantTriple knot;
  InvariantTriple mirror;
  /// "diagram" or "complex-file".
  std::string source;
  /// Homotopy classes of iota found, including any not kept for evaluation.
  std::size_t iotaClassCount = 0;
  std::size_t mirrorIotaClassCount = 0;
  /// False when different evaluated classes of iota gave different values.
  bool classesAgree = true;
  Timings timings;
  /// Empty unless the computation failed.
  std::string error;

  friend bool operator==(const KnotResult&, const KnotResult&) = default;
};

/// Invariants of one (reduced) complex, with the iota classes behind them.
struct ComplexInvariants {
  InvariantTriple values;
  IotaSolutionSet iota;
  bool classesAgree = true;
};
/// Adds the time spent to `timings` when given.
ComplexInvariants computeInvariants(const CfkComplex& c, Timings* timings = nullptr);

/// CFK of a table entry: built from the diagram or loaded from file.
CfkComplex complexFor(const KnotEntry& entry);

/// Reduces, then computes K and the mirror (via the dual complex).
KnotResult compute_knot(const std::string& name, const CfkComplex& complex, const std::string& source);
KnotResult compute_entry(const KnotEntry& entry);

/// Every entry (or those named in `only`), concurrently, sorted by name.
/// Failures are recorded in KnotResult::error.
std::vector<KnotResult> compute_all(const KnotTable& table, const std::vector<std::string>& only = {});

/// CFK_DATA_DIR from the environment, else the configured data directory.
std::filesystem::path dataDirectory();

/// name -> (K, mirror) from a tab-separated file:
/// name V0 V0under V0over mirrorV0 mirrorV0under mirrorV0over
using ExpectedTable = std::map<std::string, std::pair<InvariantTriple, InvariantTriple>>;
ExpectedTable load_expected(const std::filesystem::path& path);

/// Describes the mismatch, or nullopt when the result matches the row with
/// or without swapping the K and mirror groups.
std::optional<std::string> compareToExpected(const KnotResult& result, const std::pair<InvariantTriple, InvariantTriple>& row);

nlohmann::json toJson(const KnotResult& r);
KnotResult knotResultFromJson(const nlohmann::json& j);
nlohmann::json resultsToJson(const std::vector<KnotResult>& results);
std::vector<KnotResult> resultsFromJson(const nlohmann::json& j);

}  // namespace cfk
