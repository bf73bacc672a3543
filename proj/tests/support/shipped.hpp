#pragma once

#include <string>
#include <vector>

#include "cfk/complex.hpp"
#include "cfk/knot_table.hpp"

namespace cfk::testing {

struct ShippedComplex {
  std::string name;
  CfkComplex complex;
};

/// Every knot in the table, the example files, the raw 10_161 figure complex
/// and the independently exported 10_139 complex. Built once.
const std::vector<ShippedComplex>& shippedComplexes();

const KnotTable& knotTable();
CfkComplex dataComplex(const std::string& relative);

/// Sorted text form, for comparing complexes up to generator order.
std::string canonical(const CfkComplex& c);

}  // namespace cfk::testing
