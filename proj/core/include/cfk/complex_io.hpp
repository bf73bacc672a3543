#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "cfk/complex.hpp"

namespace cfk {

/// {"generators": [{"name", "alexander", "maslov"}], "arrows": [{"from", "to", "upower"}]}
nlohmann::json complexToJson(const CfkComplex& c);
/// Throws ParseError for malformed fields; `where` prefixes messages.
CfkComplex complexFromJson(const nlohmann::json& j, const std::string& where = "complex");

/// Loaded complexes must pass verify_complex (VerificationFailed otherwise).
CfkComplex load_complex(const std::filesystem::path& path);
void save_complex(const CfkComplex& c, const std::filesystem::path& path);

}  // namespace cfk
