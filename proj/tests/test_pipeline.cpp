#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cfk/complex_io.hpp"
#include "cfk/errors.hpp"
#include "cfk/knot_table.hpp"
#include "cfk/pipeline.hpp"
#include "shipped.hpp"

using namespace cfk;
using cfk::testing::knotTable;

namespace fs = std::filesystem;

namespace {

fs::path writeTemp(const std::string& name, const std::string& text) {
  const auto p = fs::temp_directory_path() / ("cfk_test_" + name);
  std::ofstream(p) << text;
  return p;
}

std::string errorText(const std::function<void()>& f, ErrorCode expected) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), expected) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no exception";
  return {};
}

}  // namespace

TEST(Table, LookupDiagramEntry) {
  const auto& e = knotTable().lookup("12n404");
  ASSERT_TRUE(e.fromDiagram());
  EXPECT_EQ(std::get<Parameterization>(e.source), (Parameterization{14, 7, -7, 1}));
}

TEST(Table, LookupComplexEntry) {
  const auto& e = knotTable().lookup("11n57");
  ASSERT_FALSE(e.fromDiagram());
  EXPECT_EQ(std::get<fs::path>(e.source).filename(), "11n57.json");
  EXPECT_TRUE(fs::exists(std::get<fs::path>(e.source)));
}

TEST(Table, UnknownKnot) {
  errorText([] { knotTable().lookup("nonexistent"); }, ErrorCode::KnotNotFound);
}

TEST(Table, HoldsNineteenTableKnotsAndExamples) {
  const auto expected = load_expected(dataDirectory() / "expected_invariants.tsv");
  EXPECT_EQ(expected.size(), 19u);
  for (const auto& [name, row] : expected) EXPECT_NO_THROW(knotTable().lookup(name)) << name;
  for (const char* extra : {"3_1", "4_1", "12n404", "12n749"}) EXPECT_NO_THROW(knotTable().lookup(extra));
}

TEST(Table, ParseErrorsNameTheLine) {
  const auto p = writeTemp("knots.tsv", "# header\n3_1\tparams\t1,1,1,0\n4_1\tparams\t2,x,-2,0\n");
  const auto msg = errorText([&] { load_knot_table(p); }, ErrorCode::ParseError);
  EXPECT_NE(msg.find(":3"), std::string::npos) << msg;
  const auto q = writeTemp("knots2.tsv", "3_1\tsomething\t1,1,1,0\n");
  errorText([&] { load_knot_table(q); }, ErrorCode::ParseError);
}

TEST(Table, ParameterizationText) {
  EXPECT_EQ(parseParameterization("(7, 3, -3, 4)"), (Parameterization{7, 3, -3, 4}));
  EXPECT_EQ(parseParameterization("14,7,-7,1"), (Parameterization{14, 7, -7, 1}));
  errorText([] { parseParameterization("1,2,3"); }, ErrorCode::ParseError);
  errorText([] { parseParameterization("a,b,c,d"); }, ErrorCode::ParseError);
}

TEST(Table, HfkReference) {
  const auto refs = load_hfk_reference(dataDirectory() / "reference" / "hfk_reference.tsv");
  ASSERT_TRUE(refs.count("11n57"));
  const auto& r = refs.at("11n57");
  EXPECT_EQ(r.totalRank, 17);
  EXPECT_EQ(totalRank(r.ranks), 17);
  const auto bad = writeTemp("ref.tsv", "name\ttotal_rank\ttau\tepsilon\tranks\nk\t3\t0\t0\t0:0:1\n");
  errorText([&] { load_hfk_reference(bad); }, ErrorCode::ParseError);
}

TEST(Compute, UnknotIsAllZero) {
  const auto r = compute_knot("unknot", load_complex(dataDirectory() / "complexes" / "unknot.json"), "complex-file");
  EXPECT_TRUE(r.error.empty());
  EXPECT_EQ(r.knot, (InvariantTriple{0, 0, 0}));
  EXPECT_EQ(r.mirror, (InvariantTriple{0, 0, 0}));
  EXPECT_EQ(r.source, "complex-file");
}

TEST(Compute, N57Entry) {
  const auto r = compute_entry(knotTable().lookup("11n57"));
  EXPECT_EQ(r.knot, (InvariantTriple{1, 2, 1}));
  EXPECT_EQ(r.mirror, (InvariantTriple{0, 0, -1}));
  EXPECT_TRUE(r.classesAgree);
  EXPECT_EQ(r.iotaClassCount, 16u);
}

TEST(Compute, AllIsSortedAndCollectsFailures) {
  std::vector<KnotEntry> entries = {knotTable().lookup("4_1"), knotTable().lookup("3_1")};
  entries.push_back({"broken", fs::path("/nonexistent/file.json"), 0});
  const auto results = compute_all(KnotTable(entries));
  ASSERT_EQ(results.size(), 3u);
  EXPECT_EQ(results[0].name, "3_1");
  EXPECT_EQ(results[1].name, "4_1");
  EXPECT_EQ(results[2].name, "broken");
  EXPECT_FALSE(results[2].error.empty());
  EXPECT_TRUE(results[0].error.empty());
  const auto only = compute_all(KnotTable(entries), {"4_1"});
  ASSERT_EQ(only.size(), 1u);
  EXPECT_EQ(only[0].knot, (InvariantTriple{0, 1, 0}));
}

TEST(Compare, SwappedGroupsMatch) {
  KnotResult r;
  r.name = "k";
  r.knot = {1, 1, 1};
  r.mirror = {0, 0, -1};
  EXPECT_FALSE(compareToExpected(r, {{1, 1, 1}, {0, 0, -1}}));
  EXPECT_FALSE(compareToExpected(r, {{0, 0, -1}, {1, 1, 1}}));
}

TEST(Compare, MismatchNamesColumns) {
  KnotResult r;
  r.name = "k";
  r.knot = {1, 1, 1};
  r.mirror = {0, 0, -1};
  const auto d = compareToExpected(r, {{1, 2, 1}, {0, 0, -1}});
  ASSERT_TRUE(d);
  EXPECT_NE(d->find("V0under(K) got 1 expected 2"), std::string::npos) << *d;
  EXPECT_EQ(d->find("V0over"), std::string::npos) << *d;
  r.error = "boom";
  ASSERT_TRUE(compareToExpected(r, {{1, 1, 1}, {0, 0, -1}}));
}

TEST(Compare, CorruptedExpectedFile) {
  const auto p = writeTemp("expected.tsv", "3_1\t1\t1\t1\t0\t0\t-2\n");
  const auto table = load_expected(p);
  const auto r = compute_entry(knotTable().lookup("3_1"));
  const auto d = compareToExpected(r, table.at("3_1"));
  ASSERT_TRUE(d);
  EXPECT_NE(d->find("V0over(mirror) got -1 expected -2"), std::string::npos) << *d;
}

TEST(Compare, ExpectedParseErrors) {
  errorText([] { load_expected(writeTemp("e1.tsv", "3_1\t1\t1\n")); }, ErrorCode::ParseError);
  errorText([] { load_expected(writeTemp("e2.tsv", "3_1\t1\t1\t1\t0\t0\tx\n")); }, ErrorCode::ParseError);
}

TEST(Json, ResultsRoundTrip) {
  const auto results = compute_all(knotTable(), {"3_1", "4_1", "11n57"});
  const auto j = resultsToJson(results);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(resultsFromJson(nlohmann::json::parse(j.dump())), results);
  for (const char* field : {"name", "V0", "V0under", "V0over", "source"})
    EXPECT_TRUE(j[0].contains(field) || j[0]["knot"].contains(field)) << field;
}

TEST(Json, ComplexRoundTrip) {
  const auto c = load_complex(dataDirectory() / "complexes" / "11n57.json");
  EXPECT_TRUE(complexFromJson(complexToJson(c)) == c);
}

TEST(Env, DataDirectoryOverride) {
  const auto before = dataDirectory();
  setenv("CFK_DATA_DIR", "/some/where", 1);
  EXPECT_EQ(dataDirectory(), fs::path("/some/where"));
  setenv("CFK_DATA_DIR", before.c_str(), 1);
}
