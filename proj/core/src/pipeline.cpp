#include "cfk/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "cfk/complex_io.hpp"
#include "cfk/errors.hpp"
#include "cfk/floer.hpp"
#include "cfk/homology.hpp"
#include "cfk/involutive.hpp"
#include "cfk/reduction.hpp"

#ifndef CFK_DEFAULT_DATA_DIR
#define CFK_DEFAULT_DATA_DIR "data"
#endif

namespace cfk {

namespace {

using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

ComplexInvariants computeInvariants(const CfkComplex& c, Timings* timings) {
  ComplexInvariants out;
  auto start = Clock::now();
  out.iota = solve_iota(c);
  if (timings) timings->iotaMs += msSince(start);
  start = Clock::now();
  out.values.V0 = compute_v0(c);
  const auto inv = compute_involutive_v0s(c, out.iota);
  if (timings) timings->invariantsMs += msSince(start);
  out.values.V0under = inv.vUnder;
  out.values.V0over = inv.vOver;
  out.classesAgree = inv.classesAgree();
  return out;
}

CfkComplex complexFor(const KnotEntry& entry) {
  if (const auto* p = std::get_if<Parameterization>(&entry.source)) return complexFromParameterization(*p);
  return load_complex(std::get<std::filesystem::path>(entry.source));
}

KnotResult compute_knot(const std::string& name, const CfkComplex& complex, const std::string& source) {
  KnotResult r;
  r.name = name;
  r.source = source;
  try {
    const auto start = Clock::now();
    const auto reduced = reduce(complex).first;
    const auto mirror = mirror_dual(reduced);
    r.timings.complexMs = msSince(start);

    const auto k = computeInvariants(reduced, &r.timings);
    const auto m = computeInvariants(mirror, &r.timings);

    r.knot = k.values;
    r.mirror = m.values;
    r.iotaClassCount = k.iota.validatedTotal;
    r.mirrorIotaClassCount = m.iota.validatedTotal;
    r.classesAgree = k.classesAgree && m.classesAgree;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

KnotResult compute_entry(const KnotEntry& entry) {
  const auto start = Clock::now();
  CfkComplex c;
  try {
    c = complexFor(entry);
  } catch (const std::exception& e) {
    KnotResult r;
    r.name = entry.name;
    r.source = entry.fromDiagram() ? "diagram" : "complex-file";
    r.error = e.what();
    return r;
  }
  const double built = msSince(start);
  auto r = compute_knot(entry.name, c, entry.fromDiagram() ? "diagram" : "complex-file");
  r.timings.complexMs += built;
  return r;
}

std::vector<KnotResult> compute_all(const KnotTable& table, const std::vector<std::string>& only) {
  std::vector<const KnotEntry*> work;
  if (only.empty()) {
    for (const auto& e : table.entries()) work.push_back(&e);
  } else {
    for (const auto& name : only) work.push_back(&table.lookup(name));
  }

  std::vector<KnotResult> results(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < work.size();) results[i] = compute_entry(*work[i]);
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, work.size() ? work.size() : 1);
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::sort(results.begin(), results.end(), [](const KnotResult& a, const KnotResult& b) { return a.name < b.name; });
  return results;
}

std::filesystem::path dataDirectory() {
  if (const char* env = std::getenv("CFK_DATA_DIR"); env && *env) return env;
  return CFK_DEFAULT_DATA_DIR;
}

ExpectedTable load_expected(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open");
  ExpectedTable table;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty() || line.front() == '#') continue;
    std::stringstream ss(line);
    std::string name;
    std::vector<std::string> fields;
    std::getline(ss, name, '\t');
    for (std::string f; std::getline(ss, f, '\t');) fields.push_back(f);
    const auto where = path.string() + ":" + std::to_string(lineNo);
    if (fields.size() != 6) throw Error(ErrorCode::ParseError, where + ": expected 7 tab-separated fields");
    int v[6];
    for (int i = 0; i < 6; ++i) {
      try {
        std::size_t used = 0;
        v[i] = std::stoi(fields[static_cast<std::size_t>(i)], &used);
        if (used != fields[static_cast<std::size_t>(i)].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, where + ": field " + std::to_string(i + 2) + " is not an integer");
      }
    }
    table[name] = {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
  }
  return table;
}

std::optional<std::string> compareToExpected(const KnotResult& result,
                                             const std::pair<InvariantTriple, InvariantTriple>& row) {
  if (!result.error.empty()) return result.name + ": " + result.error;
  if (result.knot == row.first && result.mirror == row.second) return std::nullopt;
  if (result.knot == row.second && result.mirror == row.first) return std::nullopt;

  const char* names[] = {"V0(K)", "V0under(K)", "V0over(K)", "V0(mirror)", "V0under(mirror)", "V0over(mirror)"};
  const int got[] = {result.knot.V0, result.knot.V0under, result.knot.V0over,
                     result.mirror.V0, result.mirror.V0under, result.mirror.V0over};
  const int want[] = {row.first.V0, row.first.V0under, row.first.V0over,
                      row.second.V0, row.second.V0under, row.second.V0over};
  std::string out = result.name + ":";
  for (int i = 0; i < 6; ++i)
    if (got[i] != want[i])
      out += std::string(" ") + names[i] + " got " + std::to_string(got[i]) + " expected " + std::to_string(want[i]) + ";";
  out += " (also no match with K and mirror swapped)";
  return out;
}

namespace {

nlohmann::json tripleJson(const InvariantTriple& t) {
  return {{"V0", t.V0}, {"V0under", t.V0under}, {"V0over", t.V0over}};
}

InvariantTriple tripleFrom(const nlohmann::json& j) {
  return {j.at("V0").get<int>(), j.at("V0under").get<int>(), j.at("V0over").get<int>()};
}

}  // namespace

nlohmann::json toJson(const KnotResult& r) {
  return {{"name", r.name},
          {"knot", tripleJson(r.knot)},
          {"mirror", tripleJson(r.mirror)},
          {"source", r.source},
          {"iotaClassCount", r.iotaClassCount},
          {"mirrorIotaClassCount", r.mirrorIotaClassCount},
          {"classesAgree", r.classesAgree},
          {"timings", {{"complexMs", r.timings.complexMs}, {"iotaMs", r.timings.iotaMs}, {"invariantsMs", r.timings.invariantsMs}}},
          {"error", r.error}};
}

KnotResult knotResultFromJson(const nlohmann::json& j) {
  try {
    KnotResult r;
    r.name = j.at("name").get<std::string>();
    r.knot = tripleFrom(j.at("knot"));
    r.mirror = tripleFrom(j.at("mirror"));
    r.source = j.at("source").get<std::string>();
    r.iotaClassCount = j.at("iotaClassCount").get<std::size_t>();
    r.mirrorIotaClassCount = j.at("mirrorIotaClassCount").get<std::size_t>();
    r.classesAgree = j.at("classesAgree").get<bool>();
    const auto& t = j.at("timings");
    r.timings = {t.at("complexMs").get<double>(), t.at("iotaMs").get<double>(), t.at("invariantsMs").get<double>()};
    r.error = j.at("error").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("knot result: ") + e.what());
  }
}

nlohmann::json resultsToJson(const std::vector<KnotResult>& results) {
  auto out = nlohmann::json::array();
  for (const auto& r : results) out.push_back(toJson(r));
  return out;
}

std::vector<KnotResult> resultsFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "results must be a JSON array");
  std::vector<KnotResult> out;
  for (const auto& item : j) out.push_back(knotResultFromJson(item));
  return out;
}

}  // namespace cfk
