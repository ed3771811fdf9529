#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "vhc/error.hpp"
#include "vhc/io.hpp"
#include "vhc/render.hpp"

using namespace vhc;
namespace fs = std::filesystem;

namespace {

HookConfig make(std::vector<int> perm, std::vector<Hook> hooks) {
  return HookConfig(Permutation(std::move(perm)), std::move(hooks));
}

const HookConfig kSevenPoint = make({3, 2, 1, 5, 6, 4, 7}, {{1, 5}, {2, 4}, {5, 7}});
const HookConfig kMaximal = make({3, 2, 4, 1, 7, 8, 6, 9, 10, 11, 5, 12}, {{1, 9}, {3, 5}, {6, 8}, {10, 12}});

std::size_t occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

fs::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  const fs::path dir = fs::temp_directory_path() / ("vhc_test_" + tag + "_" + std::to_string(rd()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(ConfigJson, Roundtrip) {
  const Json j = to_json(kMaximal);
  EXPECT_EQ(j.dump(), R"({"perm":[3,2,4,1,7,8,6,9,10,11,5,12],"hooks":[[1,9],[3,5],[6,8],[10,12]]})");
  EXPECT_EQ(hook_config_from_json(j), kMaximal);
  EXPECT_EQ(parse_hook_config(j.dump()), kMaximal);
  EXPECT_EQ(parse_hook_config(R"({"perm":[],"hooks":[]})"), make({}, {}));
}

TEST(ConfigJson, Errors) {
  EXPECT_THROW(parse_hook_config("{"), InvalidInput);
  EXPECT_EQ(parse_hook_config(R"({"perm":[1,2]})"), make({1, 2}, {}));
  EXPECT_THROW(parse_hook_config(R"({"perm":[1,2],"hooks":3})"), InvalidInput);
  EXPECT_THROW(parse_hook_config(R"({"hooks":[]})"), InvalidInput);
  EXPECT_THROW(parse_hook_config(R"({"perm":[1,1],"hooks":[]})"), InvalidInput);
  EXPECT_THROW(parse_hook_config(R"({"perm":[2,1],"hooks":[[1]]})"), InvalidInput);
  EXPECT_THROW(parse_hook_config(R"({"perm":"21","hooks":[]})"), InvalidInput);
}

TEST(IntegerJson, SmallAndLarge) {
  EXPECT_EQ(to_json(Integer(42)).dump(), "42");
  const Integer big = Integer(1) << 100;
  EXPECT_EQ(to_json(big).dump(), "\"" + to_string(big) + "\"");
}

TEST(TriangleIo, Formats) {
  const CountTriangle t({{1}, {2, 3}, {5, 23, 14}});
  EXPECT_EQ(triangle_csv(t), "1\n2,3\n5,23,14\n");
  EXPECT_EQ(triangle_text(t), "1\n2 3\n5 23 14\n");
  EXPECT_EQ(triangle_json(t).dump(), "[[1],[2,3],[5,23,14]]");
  EXPECT_EQ(triangle_csv(CountTriangle()), "");
}

TEST(TriangleIo, ReadSkipsCommentsAndBlankLines) {
  std::istringstream in("# header\n1\n\n2,3\n# note\n5,23,14\n");
  EXPECT_EQ(read_triangle_csv(in), CountTriangle({{1}, {2, 3}, {5, 23, 14}}));
  std::istringstream again(triangle_csv(duck_triangle(5)));
  EXPECT_EQ(read_triangle_csv(again), duck_triangle(5));
}

TEST(TriangleIo, ReadRejectsMalformed) {
  std::istringstream ragged("1\n2\n");
  EXPECT_THROW(read_triangle_csv(ragged), InvalidInput);
  std::istringstream junk("1\nx,3\n");
  EXPECT_THROW(read_triangle_csv(junk), InvalidInput);
  EXPECT_THROW(read_triangle_csv(fs::path("/nonexistent/vhc.csv")), InvalidInput);
}

TEST(IdentityJson, Shape) {
  const Json j = to_json(verify_identities(3));
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("kmax").get<int>(), 3);
  EXPECT_EQ(j.at("identities").size(), 10u);
}

TEST(Cache, HitMissAndKeying) {
  const fs::path dir = fresh_dir("cache");
  const ResultCache cache(dir);
  const Json key = {{"command", "count"}, {"params", {{"k", 4}}}, {"version", "1.0.0"}};
  EXPECT_FALSE(cache.load(key).has_value());
  cache.store(key, Json{{"value", 462}});
  ASSERT_TRUE(cache.load(key).has_value());
  EXPECT_EQ(cache.load(key)->at("value").get<int>(), 462);

  Json other_version = key;
  other_version["version"] = "2.0.0";
  EXPECT_FALSE(cache.load(other_version).has_value());
  Json other_params = key;
  other_params["params"]["k"] = 5;
  EXPECT_FALSE(cache.load(other_params).has_value());
  EXPECT_NE(cache.path_for(key), cache.path_for(other_params));

  // An entry whose stored key differs from the requested one is a miss.
  std::ofstream(cache.path_for(other_params)) << Json{{"key", key}, {"value", 1}}.dump();
  EXPECT_FALSE(cache.load(other_params).has_value());
  // So is a corrupt file.
  std::ofstream(cache.path_for(other_version)) << "not json";
  EXPECT_FALSE(cache.load(other_version).has_value());
  fs::remove_all(dir);
}

TEST(Fnv, KnownVectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Svg, CountsElements) {
  const std::string svg = render_svg(kSevenPoint);
  EXPECT_EQ(occurrences(svg, "<circle"), 7u);
  EXPECT_EQ(occurrences(svg, "<path"), 3u);
  EXPECT_EQ(occurrences(svg, "<text"), 0u);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  // Point (1, 3) of an 8-unit canvas sits at x = 40, y = 40 * (8 - 3).
  EXPECT_NE(svg.find("<circle cx=\"40\" cy=\"200\""), std::string::npos);
  // Hook (2,4): SW point (2,2), corner (2,5), NE point (4,5).
  EXPECT_NE(svg.find("M 80 240 L 80 120 L 160 120"), std::string::npos);
}

TEST(Svg, Deterministic) {
  EXPECT_EQ(render_svg(kMaximal), render_svg(kMaximal));
  EXPECT_EQ(render_svg(kMaximal, {.labels = true}), render_svg(kMaximal, {.labels = true}));
}

TEST(Svg, Labels) {
  const std::string svg = render_svg(kMaximal, {.labels = true});
  EXPECT_EQ(occurrences(svg, "<text"), 12u);
  std::string letters;
  for (int p = 1; p <= kMaximal.size(); ++p) letters += role_label(kMaximal, p) + "|";
  EXPECT_EQ(letters, "Y|X|Y|X|Z|Y|X|Z|Z|Y|X|Z|");
}

TEST(Svg, EmptyConfig) {
  const std::string svg = render_svg(make({}, {}));
  EXPECT_EQ(occurrences(svg, "<circle"), 0u);
  EXPECT_NE(svg.find("width=\"40\""), std::string::npos);
}

TEST(Tikz, Structure) {
  const std::string t = render_tikz(kSevenPoint, {.labels = true});
  EXPECT_EQ(t.rfind("\\begin{tikzpicture}", 0), 0u);
  EXPECT_NE(t.find("\\end{tikzpicture}"), std::string::npos);
  EXPECT_EQ(occurrences(t, "\\draw[thick]"), 3u);
  EXPECT_EQ(occurrences(t, "\\fill"), 7u);
  EXPECT_NE(t.find("(2,2) -- (2,5) -- (4,5)"), std::string::npos);
  EXPECT_GT(occurrences(t, "\\node"), 0u);
  EXPECT_EQ(occurrences(render_tikz(kSevenPoint), "\\node"), 0u);
}
