#include "cfk/complex_io.hpp"

#include <fstream>
#include <map>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorCode::ParseError, where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::ParseError, where + ": missing field \"" + key + "\"");
  return *it;
}

int intField(const json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, where + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::string stringField(const json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_string()) throw Error(ErrorCode::ParseError, where + ": field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

json complexToJson(const CfkComplex& c) {
  json gens = json::array();
  for (const auto& g : c.generators())
    gens.push_back({{"name", g.name}, {"alexander", g.alexander}, {"maslov", g.maslov}});
  json arrows = json::array();
  for (const auto& a : c.arrows())
    arrows.push_back({{"from", c.generator(a.from).name}, {"to", c.generator(a.to).name}, {"upower", a.upower}});
  return {{"generators", gens}, {"arrows", arrows}};
}

CfkComplex complexFromJson(const json& j, const std::string& where) {
  const auto& gens = field(j, "generators", where);
  const auto& arrows = field(j, "arrows", where);
  if (!gens.is_array() || !arrows.is_array())
    throw Error(ErrorCode::ParseError, where + ": \"generators\" and \"arrows\" must be arrays");

  std::vector<Generator> generators;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto at = where + ": generators[" + std::to_string(i) + "]";
    Generator g{stringField(gens[i], "name", at), intField(gens[i], "alexander", at), intField(gens[i], "maslov", at)};
    if (!index.emplace(g.name, i).second) throw Error(ErrorCode::ParseError, at + ": duplicate name " + g.name);
    generators.push_back(std::move(g));
  }
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto at = where + ": arrows[" + std::to_string(i) + "]";
    auto lookup = [&](const char* key) {
      const auto name = stringField(arrows[i], key, at);
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorCode::ParseError, at + ": unknown generator " + name);
      return it->second;
    };
    Arrow a{lookup("from"), lookup("to"), intField(arrows[i], "upower", at)};
    if (a.upower < 0) throw Error(ErrorCode::ParseError, at + ": negative upower");
    out.push_back(a);
  }
  return CfkComplex(std::move(generators), std::move(out));
}

CfkComplex load_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
  auto c = complexFromJson(j, path.string());
  if (auto report = verify_complex(c); !report.ok())
    throw Error(ErrorCode::VerificationFailed, path.string() + ": " + report.problems.front());
  return c;
}

void save_complex(const CfkComplex& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, path.string() + ": cannot write");
  out << complexToJson(c).dump(2) << '\n';
}

}  // namespace cfk
