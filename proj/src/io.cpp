#include "vhc/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "vhc/error.hpp"

namespace vhc {

Json to_json(const HookConfig& c) {
  Json j;
  j["perm"] = Json::array();
  for (int v : c.perm().entries()) j["perm"].push_back(v);
  j["hooks"] = Json::array();
  for (const Hook& h : c.hooks()) j["hooks"].push_back({h.sw, h.ne});
  return j;
}

HookConfig hook_config_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("perm") || !j["perm"].is_array()) {
    throw InvalidInput("hook configuration: expected an object with a \"perm\" array");
  }
  std::vector<int> perm;
  for (const auto& v : j["perm"]) {
    if (!v.is_number_integer()) throw InvalidInput("hook configuration: perm entries must be integers");
    perm.push_back(v.get<int>());
  }
  std::vector<Hook> hooks;
  if (j.contains("hooks")) {
    if (!j["hooks"].is_array()) throw InvalidInput("hook configuration: \"hooks\" must be an array");
    for (const auto& h : j["hooks"]) {
      if (!h.is_array() || h.size() != 2 || !h[0].is_number_integer() || !h[1].is_number_integer()) {
        throw InvalidInput("hook configuration: each hook must be [sw, ne]");
      }
      hooks.push_back({h[0].get<int>(), h[1].get<int>()});
    }
  }
  return HookConfig(Permutation(std::move(perm)), std::move(hooks));
}

HookConfig parse_hook_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("hook configuration: ") + e.what());
  }
  return hook_config_from_json(j);
}

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

namespace {

std::string join_triangle(const CountTriangle& t, char sep) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out.push_back(sep);
      out += row[i].str();
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace

std::string triangle_csv(const CountTriangle& t) { return join_triangle(t, ','); }
std::string triangle_text(const CountTriangle& t) { return join_triangle(t, ' '); }

Json triangle_json(const CountTriangle& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows()) {
    Json r = Json::array();
    for (const Integer& v : row) r.push_back(to_json(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

CountTriangle read_triangle_csv(std::istream& in) {
  std::vector<std::vector<Integer>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<Integer> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        row.emplace_back(cell);
      } catch (const std::exception&) {
        throw InvalidInput("triangle csv line " + std::to_string(line_no) + ": bad entry \"" + cell + "\"");
      }
    }
    rows.push_back(std::move(row));
  }
  return CountTriangle(std::move(rows));
}

CountTriangle read_triangle_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  return read_triangle_csv(in);
}

Json to_json(const IdentityReport& report) {
  Json j;
  j["kmax"] = report.kmax;
  j["passed"] = report.passed();
  j["identities"] = Json::array();
  for (const IdentityResult& r : report.identities) {
    Json item;
    item["id"] = r.id;
    item["name"] = r.name;
    item["statement"] = r.statement;
    item["method"] = r.method;
    item["passed"] = r.passed();
    item["checks"] = Json::array();
    for (const IdentityCheck& c : r.checks) {
      Json check;
      check["k"] = c.k;
      if (!c.label.empty()) check["label"] = c.label;
      check["lhs"] = to_json(c.lhs);
      check["rhs"] = to_json(c.rhs);
      check["passed"] = c.passed();
      item["checks"].push_back(std::move(check));
    }
    j["identities"].push_back(std::move(item));
  }
  j["notes"] = report.notes;
  return j;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::path_for(const Json& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a64(key.dump())));
  return dir_ / name;
}

std::optional<Json> ResultCache::load(const Json& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    Json entry = Json::parse(in);
    if (entry.value("key", Json()) != key) return std::nullopt;
    return entry.at("value");
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const Json& key, const Json& value) const {
  std::filesystem::create_directories(dir_);
  const auto path = path_for(key);
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    Json entry;
    entry["key"] = key;
    entry["value"] = value;
    out << entry.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace vhc
