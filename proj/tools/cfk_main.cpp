#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfk/complex_io.hpp"
#include "cfk/errors.hpp"
#include "cfk/floer.hpp"
#include "cfk/homology.hpp"
#include "cfk/involutive.hpp"
#include "cfk/knot_table.hpp"
#include "cfk/pipeline.hpp"
#include "cfk/reduction.hpp"

namespace fs = std::filesystem;
using namespace cfk;

namespace {

std::string triple(const InvariantTriple& t) {
  return "(" + std::to_string(t.V0) + ", " + std::to_string(t.V0under) + ", " + std::to_string(t.V0over) + ")";
}

std::string elementName(const FreeGradedComplex& f, const HomogeneousElement& e) {
  std::string s;
  for (auto i : e.support.ones()) s += (s.empty() ? "" : " + ") + f.names[i];
  return "[" + (s.empty() ? std::string("0") : s) + "]";
}

void printTowers(const std::string& label, const CfkComplex& c, const GradedMap& iota) {
  const auto cone = build_ai0_minus(c, iota);
  const auto report = classifyTowers(cone);
  std::cout << "  " << label << " towers: " << elementName(cone.complex, report.notImQTower) << " at " << report.r1
            << " (never in Im Q), " << elementName(cone.complex, report.eventuallyImQTower) << " at " << report.r2
            << " (eventually in Im Q), " << report.extras.size() << " torsion\n";
}

// SNF ranks against the U-truncated brute force at n and n + 2.
bool oracleAgrees(std::ostream& log, const std::string& label, const FreeGradedComplex& f, int n) {
  const auto m = snf_homology(f);
  bool ok = true;
  for (int level : {n, n + 2}) {
    const bool same = truncatedHomology(f, level) == predictedTruncatedHomology(m, level);
    log << "  oracle " << label << " N=" << level << ": " << (same ? "agree" : "DISAGREE") << "\n";
    ok = ok && same;
  }
  return ok;
}

struct ComputeOptions {
  std::string knot;
  std::string params;
  std::string complex;
  std::string table;
  bool json = false;
  int oracle = 0;
};

int runCompute(const ComputeOptions& o) {
  std::string name;
  std::string source;
  CfkComplex c;
  if (!o.knot.empty()) {
    const auto table = load_knot_table(o.table.empty() ? dataDirectory() / "knots.tsv" : fs::path(o.table));
    const auto& entry = table.lookup(o.knot);
    name = entry.name;
    source = entry.fromDiagram() ? "diagram" : "complex-file";
    c = complexFor(entry);
  } else if (!o.params.empty()) {
    const auto p = parseParameterization(o.params);
    name = to_string(p);
    source = "diagram";
    c = complexFromParameterization(p);
  } else {
    name = fs::path(o.complex).stem().string();
    source = "complex-file";
    c = load_complex(o.complex);
  }

  const auto result = compute_knot(name, c, source);
  if (!result.error.empty()) {
    std::cerr << name << ": " << result.error << "\n";
    return 1;
  }
  if (o.json) {
    std::cout << toJson(result).dump(2) << "\n";
  } else {
    std::cout << result.name << " (" << result.source << ")\n"
              << "  K      (V0, V0under, V0over) = " << triple(result.knot) << "\n"
              << "  mirror (V0, V0under, V0over) = " << triple(result.mirror) << "\n"
              << "  iota classes: " << result.iotaClassCount << " / " << result.mirrorIotaClassCount
              << (result.classesAgree ? ", all agree" : ", CLASSES DISAGREE") << "\n";
    const auto reduced = reduce(c).first;
    const auto mirror = mirror_dual(reduced);
    printTowers("K", reduced, solve_iota(reduced).validated.front());
    printTowers("mirror", mirror, solve_iota(mirror).validated.front());
    std::cout << std::fixed << std::setprecision(1) << "  time: complex " << result.timings.complexMs << " ms, iota "
              << result.timings.iotaMs << " ms, invariants " << result.timings.invariantsMs << " ms\n";
  }

  if (o.oracle > 0) {
    const auto reduced = reduce(c).first;
    auto& log = o.json ? std::cerr : std::cout;
    bool ok = true;
    for (const auto& [label, cx] : {std::pair{std::string("K"), reduced}, std::pair{std::string("mirror"), mirror_dual(reduced)}}) {
      ok = oracleAgrees(log, label + " A0", build_a0_minus(cx), o.oracle) && ok;
      ok = oracleAgrees(log, label + " AI0", build_ai0_minus(cx, solve_iota(cx).validated.front()).complex, o.oracle) && ok;
    }
    if (!ok) return 1;
  }
  return result.classesAgree ? 0 : 1;
}

struct TableOptions {
  std::string expected;
  std::string knots;
  std::string out;
  std::vector<std::string> only;
};

int runTable(const TableOptions& o) {
  const auto expected = load_expected(o.expected.empty() ? dataDirectory() / "expected_invariants.tsv" : fs::path(o.expected));
  const auto table = load_knot_table(o.knots.empty() ? dataDirectory() / "knots.tsv" : fs::path(o.knots));
  std::vector<std::string> names = o.only;
  if (names.empty())
    for (const auto& [name, row] : expected) names.push_back(name);
  for (const auto& n : names)
    if (!expected.count(n)) throw Error(ErrorCode::KnotNotFound, "no expected row for '" + n + "'");

  const auto results = compute_all(table, names);
  std::size_t mismatches = 0;
  for (const auto& r : results) {
    const auto diff = compareToExpected(r, expected.at(r.name));
    std::cout << std::left << std::setw(8) << r.name << " " << triple(r.knot) << " " << triple(r.mirror) << "  "
              << (diff ? "MISMATCH " + *diff : std::string("ok")) << "\n";
    if (diff) ++mismatches;
  }
  std::cout << results.size() - mismatches << "/" << results.size() << " rows match\n";

  if (!o.out.empty()) {
    std::ofstream out(o.out);
    if (!out) throw Error(ErrorCode::ParseError, o.out + ": cannot write");
    out << resultsToJson(results).dump(2) << "\n";
  }
  return mismatches == 0 ? 0 : 1;
}

int runVerify(const std::string& path) {
  CfkComplex c;
  try {
    c = complexFromJson(nlohmann::json::parse(std::ifstream(path)), path);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
  const auto report = verify_complex(c);
  std::cout << path << ": " << c.size() << " generators, " << c.arrows().size() << " arrows\n";
  if (!report.ok()) {
    for (const auto& p : report.problems) std::cout << "  problem: " << p << "\n";
    return 1;
  }
  std::cout << "  verified\n"
            << "  Alexander polynomial: " << formatLaurent(alexander_polynomial(c)) << "\n"
            << "  HFK-hat: " << formatPoincare(hfk_hat(c)) << " (rank " << totalRank(hfk_hat(c)) << ")\n"
            << "  V0 = " << compute_v0(c) << "\n";
  return 0;
}

struct SearchOptions {
  std::string knot;
  std::string reference;
  int extra = 0;
  int limit = 3;
};

// Tuples whose diagram reproduces the reference HFK-hat of a knot, or of its
// mirror.
int runSearch(const SearchOptions& o) {
  const auto refs = load_hfk_reference(o.reference.empty() ? dataDirectory() / "reference" / "hfk_reference.tsv"
                                                            : fs::path(o.reference));
  auto it = refs.find(o.knot);
  if (it == refs.end()) throw Error(ErrorCode::KnotNotFound, "no reference HFK for '" + o.knot + "'");
  const auto& want = it->second.ranks;
  const auto wantMirror = mirrorTable(want);

  int found = 0;
  const int base = (it->second.totalRank - 1) / 2;
  for (int k = base; k <= base + o.extra && found < o.limit; ++k)
    for (int r = 0; r <= k && found < o.limit; ++r)
      for (int s = 0; s <= 2 * (k - r) + 1 && found < o.limit; ++s)
        for (int c = -k; c <= k && found < o.limit; ++c) {
          const Parameterization p{k, r, c, s};
          HfkTable h;
          try {
            h = hfk_hat(complexFromParameterization(p));
          } catch (const Error&) {
            continue;
          }
          if (h == want || h == wantMirror) {
            std::cout << to_string(p) << (h == want ? "" : " (mirror)") << "\n";
            ++found;
          }
        }
  if (found == 0) std::cout << "no tuple found\n";
  return found > 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Involutive concordance invariants of (1,1) knots"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* cmdCompute = app.add_subcommand("compute", "Invariants of one knot and its mirror");
  auto* knotOpt = cmdCompute->add_option("--knot", compute.knot, "Knot name from the table");
  auto* paramsOpt = cmdCompute->add_option("--params", compute.params, "Diagram tuple K,R,C,S");
  auto* complexOpt = cmdCompute->add_option("--complex", compute.complex, "Complex JSON file")->check(CLI::ExistingFile);
  knotOpt->excludes(paramsOpt)->excludes(complexOpt);
  paramsOpt->excludes(complexOpt);
  cmdCompute->add_option("--table", compute.table, "Knot table (default: data dir knots.tsv)");
  cmdCompute->add_flag("--json", compute.json, "Print the result as JSON");
  cmdCompute->add_option("--oracle-truncation", compute.oracle, "Check SNF homology against U-truncation at N and N+2")
      ->check(CLI::PositiveNumber);
  cmdCompute->callback([&] {
    if (compute.knot.empty() && compute.params.empty() && compute.complex.empty())
      throw CLI::ValidationError("compute", "one of --knot, --params, --complex is required");
  });

  TableOptions table;
  auto* cmdTable = app.add_subcommand("table", "Recompute the expected table and compare");
  cmdTable->add_option("--expected", table.expected, "Expected results (default: data dir expected_invariants.tsv)");
  cmdTable->add_option("--knots", table.knots, "Knot table (default: data dir knots.tsv)");
  cmdTable->add_option("--out", table.out, "Write the results as JSON");
  cmdTable->add_option("--only", table.only, "Restrict to these knots");

  std::string verifyPath;
  auto* cmdVerify = app.add_subcommand("verify", "Check a complex file and print its polynomials and V0");
  cmdVerify->add_option("path", verifyPath, "Complex JSON file")->required()->check(CLI::ExistingFile);

  SearchOptions search;
  auto* cmdSearch = app.add_subcommand("search", "Find diagram tuples matching a knot's reference HFK-hat");
  cmdSearch->add_option("--knot", search.knot, "Knot name in the reference file")->required();
  cmdSearch->add_option("--reference", search.reference, "Reference file (default: data dir reference/hfk_reference.tsv)");
  cmdSearch->add_option("--extra", search.extra, "Also try this many larger point counts")->check(CLI::NonNegativeNumber);
  cmdSearch->add_option("--limit", search.limit, "Stop after this many tuples")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmdCompute) return runCompute(compute);
    if (*cmdTable) return runTable(table);
    if (*cmdVerify) return runVerify(verifyPath);
    if (*cmdSearch) return runSearch(search);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
