#include "cfk/knot_table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cfk/errors.hpp"

namespace cfk {

const KnotEntry& KnotTable::lookup(const std::string& name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const KnotEntry& e) { return e.name == name; });
  if (it == entries_.end()) throw Error(ErrorCode::KnotNotFound, "no knot named '" + name + "' in the table");
  return *it;
}

Parameterization parseParameterization(const std::string& text) {
  std::string cleaned;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')' && ch != '\t') cleaned += ch;
  std::vector<int> values;
  std::size_t start = 0;
  for (;;) {
    const auto comma = cleaned.find(',', start);
    const auto token = cleaned.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorCode::ParseError, "bad integer '" + token + "' in tuple '" + text + "'");
    values.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != 4) throw Error(ErrorCode::ParseError, "tuple '" + text + "' needs 4 integers");
  return {values[0], values[1], values[2], values[3]};
}

KnotTable load_knot_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open");
  std::vector<KnotEntry> entries;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto where = path.string() + ":" + std::to_string(lineNo);

    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, '\t')) fields.push_back(f);
    if (fields.size() != 3)
      throw Error(ErrorCode::ParseError, where + ": expected 3 tab-separated fields, got " + std::to_string(fields.size()));
    if (fields[0].empty()) throw Error(ErrorCode::ParseError, where + ": field 1 (name) is empty");

    KnotEntry e;
    e.name = fields[0];
    e.line = lineNo;
    if (fields[1] == "params") {
      try {
        e.source = parseParameterization(fields[2]);
      } catch (const Error& err) {
        throw Error(ErrorCode::ParseError, where + ": field 3: " + err.detail());
      }
    } else if (fields[1] == "complex") {
      e.source = path.parent_path() / fields[2];
    } else {
      throw Error(ErrorCode::ParseError, where + ": field 2 must be 'params' or 'complex', got '" + fields[1] + "'");
    }
    if (std::any_of(entries.begin(), entries.end(), [&](const KnotEntry& x) { return x.name == e.name; }))
      throw Error(ErrorCode::ParseError, where + ": duplicate knot " + e.name);
    entries.push_back(std::move(e));
  }
  return KnotTable(std::move(entries));
}

std::map<std::string, HfkReference> load_hfk_reference(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open");
  std::map<std::string, HfkReference> out;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty() || line.front() == '#') continue;
    const auto where = path.string() + ":" + std::to_string(lineNo);
    std::istringstream ls(line);
    HfkReference r;
    if (!(ls >> r.name >> r.totalRank >> r.tau >> r.epsilon))
      throw Error(ErrorCode::ParseError, where + ": expected name, rank, tau, epsilon");
    std::string item;
    while (ls >> item) {
      int a = 0, m = 0, count = 0;
      char c1 = 0, c2 = 0;
      std::istringstream is(item);
      if (!(is >> a >> c1 >> m >> c2 >> count) || c1 != ':' || c2 != ':')
        throw Error(ErrorCode::ParseError, where + ": bad rank item '" + item + "'");
      r.ranks[{a, m}] = count;
    }
    if (totalRank(r.ranks) != r.totalRank) throw Error(ErrorCode::ParseError, where + ": ranks do not add up");
    out[r.name] = std::move(r);
  }
  return out;
}

}  // namespace cfk
