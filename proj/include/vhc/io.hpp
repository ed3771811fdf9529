#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "vhc/enumerative.hpp"
#include "vhc/hook_config.hpp"

namespace vhc {

using Json = nlohmann::ordered_json;

/// {"perm":[3,2,...],"hooks":[[1,9],...]}, 1-based.
Json to_json(const HookConfig& c);
HookConfig hook_config_from_json(const Json& j);
/// Throws InvalidInput with the parser's diagnostic on malformed text.
HookConfig parse_hook_config(std::string_view text);

/// An integer as a JSON number when it fits in 64 bits, else a decimal string.
Json to_json(const Integer& v);

/// One row per line, entries separated by commas. Empty triangle -> "".
std::string triangle_csv(const CountTriangle& t);
/// One row per line, entries separated by single spaces.
std::string triangle_text(const CountTriangle& t);
Json triangle_json(const CountTriangle& t);

/// Reads the CSV form; blank lines and lines starting with '#' are skipped.
CountTriangle read_triangle_csv(std::istream& in);
CountTriangle read_triangle_csv(const std::filesystem::path& path);

Json to_json(const IdentityReport& report);

/// Flat-file JSON cache keyed by a hash of (command, parameters, version).
/// Each entry stores its full key, so a hash collision or a version change
/// reads as a miss.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::optional<Json> load(const Json& key) const;
  void store(const Json& key, const Json& value) const;
  std::filesystem::path path_for(const Json& key) const;

 private:
  std::filesystem::path dir_;
};

/// FNV-1a over the bytes of `data`.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace vhc
