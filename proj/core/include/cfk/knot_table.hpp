#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cfk/complex.hpp"
#include "cfk/diagram.hpp"

namespace cfk {

/// One record of the knot table: either a diagram tuple or a complex file
/// (absolute, resolved against the table's directory).
struct KnotEntry {
  std::string name;
  std::variant<Parameterization, std::filesystem::path> source;
  int line = 0;

  bool fromDiagram() const noexcept { return std::holds_alternative<Parameterization>(source); }
};

class KnotTable {
 public:
  KnotTable() = default;
  explicit KnotTable(std::vector<KnotEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<KnotEntry>& entries() const noexcept { return entries_; }
  /// Throws KnotNotFound.
  const KnotEntry& lookup(const std::string& name) const;

 private:
  std::vector<KnotEntry> entries_;
};

/// "K,R,C,S" with optional spaces or parentheses; throws ParseError.
Parameterization parseParameterization(const std::string& text);

/// Tab-separated: name, "params" or "complex", tuple or relative path. Blank
/// lines and lines starting with '#' are skipped. ParseError names the line
/// and field.
KnotTable load_knot_table(const std::filesystem::path& path);

/// HFK-hat data for a knot from an independent program.
struct HfkReference {
  std::string name;
  int totalRank = 0;
  int tau = 0;
  int epsilon = 0;
  HfkTable ranks;
};

/// Tab-separated: name, total rank, tau, epsilon, then "A:M:count" items
/// separated by spaces.
std::map<std::string, HfkReference> load_hfk_reference(const std::filesystem::path& path);

}  // namespace cfk
