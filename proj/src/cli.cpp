#include "vhc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "vhc/bijections.hpp"
#include "vhc/enumerative.hpp"
#include "vhc/error.hpp"
#include "vhc/hook_config.hpp"
#include "vhc/io.hpp"
#include "vhc/render.hpp"
#include "vhc/version.hpp"
#include "vhc/words.hpp"

namespace vhc::cli {

namespace {

struct Options {
  // shared
  std::string format;
  std::string cache_dir;
  bool no_cache = false;
  int limit = -1;
  unsigned threads = 1;

  // triangle
  std::string triangle_kind;
  std::string method = "transform";
  int kmax = 0;

  // verify
  int brute_bound = kDefaultBruteForceBound;
  int eq1_max = 8;
  int roundtrip_max = 4;
  std::string golden_dir = VHC_DEFAULT_GOLDEN_DIR;
  std::string report_path;

  // map
  std::string direction;
  std::string input;
  bool roundtrip = false;

  // render
  bool labels = false;

  // enumerate / count
  std::string object;
  std::vector<std::string> args;
  int hooks = -1;
};

std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// "-" reads stdin, "@path" reads a file, anything else is literal.
std::string resolve_input(const std::string& text) {
  if (text == "-") return slurp(std::cin);
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw InvalidInput("cannot open " + text.substr(1));
    return slurp(in);
  }
  return text;
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput(std::string(what) + ": expected an integer, got \"" + s + "\"");
}

std::optional<ResultCache> open_cache(const Options& o) {
  if (o.no_cache || o.cache_dir.empty()) return std::nullopt;
  return ResultCache(o.cache_dir);
}

Json cache_key(const std::string& command, Json params) {
  Json key;
  key["command"] = command;
  key["params"] = std::move(params);
  key["version"] = VHC_VERSION;
  return key;
}

Json cached(const Options& o, const Json& key, const std::function<Json()>& compute) {
  const auto cache = open_cache(o);
  if (cache) {
    if (auto hit = cache->load(key)) return *hit;
  }
  Json value = compute();
  if (cache) cache->store(key, value);
  return value;
}

CountTriangle triangle_from_json(const Json& j) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : j) {
    std::vector<Integer> row;
    for (const auto& v : r) row.push_back(v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<std::int64_t>()));
    rows.push_back(std::move(row));
  }
  return CountTriangle(std::move(rows));
}

UnderlineMethod parse_method(const std::string& m) {
  if (m == "transform") return UnderlineMethod::Transform;
  if (m == "enumerate") return UnderlineMethod::Enumerate;
  return UnderlineMethod::BruteVhc;
}

CountTriangle compute_triangle(const std::string& kind, int kmax, const std::string& method, int limit) {
  if (kind == "duck") {
    return duck_triangle(kmax, limit < 0 ? kDefaultEnumerationBound : limit);
  }
  const UnderlineMethod m = parse_method(method);
  const int bound = limit >= 0 ? limit : m == UnderlineMethod::BruteVhc ? kDefaultBruteForceBound : kDefaultEnumerationBound;
  CountTriangle t = underlined_triangle(kmax, m, bound);
  return kind == "redvhc" ? t.reversed() : t;
}

int cmd_triangle(const Options& o, std::ostream& out) {
  if (o.kmax < 0) throw InvalidInput("--kmax must be nonnegative");
  const Json key = cache_key("triangle", {{"kind", o.triangle_kind},
                                          {"kmax", o.kmax},
                                          {"method", o.triangle_kind == "duck" ? "enumerate" : o.method},
                                          {"limit", o.limit}});
  const CountTriangle t = triangle_from_json(cached(o, key, [&] {
    return triangle_json(compute_triangle(o.triangle_kind, o.kmax, o.method, o.limit));
  }));
  if (o.format == "json") {
    out << triangle_json(t).dump() << '\n';
  } else if (o.format == "text") {
    out << triangle_text(t);
  } else {
    out << triangle_csv(t);
  }
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct GoldenResult {
  Json json;
  bool passed = true;
};

GoldenResult compare_golden(const std::string& name, const std::filesystem::path& path, const CountTriangle& computed,
                            std::ostream& err) {
  GoldenResult r;
  r.json["file"] = name;
  Json mismatches = Json::array();
  const CountTriangle golden = read_triangle_csv(path);
  const int rows = std::min(golden.kmax(), computed.kmax());
  for (int k = 1; k <= rows; ++k) {
    for (int i = 0; i < k; ++i) {
      if (golden.at(k, i) == computed.at(k, i)) continue;
      err << "golden mismatch in " << name << ": row " << k << " entry " << i << " expected "
          << golden.at(k, i).str() << ", computed " << computed.at(k, i).str() << '\n';
      mismatches.push_back({{"k", k}, {"i", i}, {"golden", to_json(golden.at(k, i))}, {"computed", to_json(computed.at(k, i))}});
    }
  }
  r.json["rows_compared"] = rows;
  r.json["mismatches"] = mismatches;
  r.passed = mismatches.empty();
  r.json["passed"] = r.passed;
  return r;
}

Json codec_check(int k) {
  Json j;
  j["k"] = k;
  std::size_t words = 0;
  std::size_t failures = 0;
  for_each_3d_dyck(k, [&](const Word3D& w) {
    ++words;
    const UnderlinedDuckWord u = canonical_underlining(w);
    const RewrittenDuckWord r = rewrite(u);
    if (!validate_rewritten(r) || decode(r) != u) ++failures;
  });
  std::vector<std::uint64_t> census(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    for_each_rewritten(k, i, [&](const RewrittenDuckWord& r) {
      ++census[static_cast<std::size_t>(i)];
      if (rewrite(decode(r)) != r) ++failures;
    });
  }
  j["words"] = words;
  j["rewritten_census"] = census;
  j["failures"] = failures;
  return j;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.kmax < 0) throw InvalidInput("--kmax must be nonnegative");
  const int limit = o.limit < 0 ? kDefaultEnumerationBound : o.limit;
  Json report;
  report["version"] = VHC_VERSION;
  report["kmax"] = o.kmax;
  bool ok = true;

  const IdentityReport ids = verify_identities(o.kmax, limit);
  for (const IdentityResult& r : ids.identities) {
    if (!r.passed()) err << "identity " << r.id << " (" << r.name << ") failed\n";
  }
  ok = ok && ids.passed();
  report["identities"] = to_json(ids);

  const CountTriangle duck = duck_triangle(o.kmax, limit);
  const CountTriangle underlined = binomial_transform(duck);
  const std::filesystem::path dir(o.golden_dir);
  Json golden = Json::array();
  for (const auto& [file, triangle] :
       {std::pair<std::string, CountTriangle>{"duck_triangle.csv", duck}, {"redvhc_triangle.csv", underlined.reversed()}}) {
    GoldenResult g = compare_golden(file, dir / file, triangle, err);
    ok = ok && g.passed;
    golden.push_back(std::move(g.json));
  }
  report["golden"] = golden;

  const int n_brute = std::min(o.brute_bound, 3 * o.kmax);
  Json brute = Json::array();
  if (n_brute > 0) {
    const auto census = redvhc_census(n_brute, o.threads);
    for (int k = 1; k <= o.kmax; ++k) {
      for (int i = 0; i < k; ++i) {
        const int n = 3 * k - i;
        if (n > n_brute) continue;
        const auto it = census.find({k, n});
        const Integer counted = it == census.end() ? 0 : it->second;
        const bool pass = counted == underlined.at(k, i);
        if (!pass) {
          err << "brute-force mismatch at k=" << k << " i=" << i << ": enumerated " << counted.str()
              << ", transform " << underlined.at(k, i).str() << '\n';
        }
        ok = ok && pass;
        brute.push_back({{"k", k}, {"i", i}, {"n", n}, {"enumerated", to_json(counted)},
                         {"transform", to_json(underlined.at(k, i))}, {"passed", pass}});
      }
    }
  }
  report["brute_force"] = brute;

  Json eq1 = Json::array();
  for (int n = 0; n <= std::min(o.eq1_max, o.brute_bound); ++n) {
    const Eq1Report r = verify_eq1(n, o.brute_bound);
    if (!r.agree()) err << "counting identity over Av_" << n << " failed: " << r.lhs << " != " << r.rhs << '\n';
    ok = ok && r.agree();
    eq1.push_back({{"n", n}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"passed", r.agree()}});
  }
  report["eq1"] = eq1;

  Json roundtrips = Json::array();
  Json codec = Json::array();
  const int k_round = std::min({o.kmax, o.roundtrip_max, o.brute_bound / 3});
  for (int k = 1; k <= k_round; ++k) {
    for (const RoundtripCheck& c : verify_roundtrips(k)) {
      if (!c.passed()) err << "roundtrip " << c.map << " failed at k=" << k << " i=" << c.i << '\n';
      ok = ok && c.passed();
      roundtrips.push_back({{"map", c.map}, {"k", c.k}, {"i", c.i}, {"configurations", c.configurations},
                            {"words", c.words}, {"failures", c.failures}, {"passed", c.passed()}});
    }
  }
  for (int k = 1; k <= std::min(o.kmax, o.roundtrip_max); ++k) {
    Json c = codec_check(k);
    bool pass = c["failures"] == 0;
    for (int i = 0; i < k; ++i) {
      pass = pass && Integer(c["rewritten_census"][static_cast<std::size_t>(i)].get<std::uint64_t>()) == duck.at(k, i);
    }
    if (!pass) err << "rewriting codec failed at k=" << k << '\n';
    c["passed"] = pass;
    ok = ok && pass;
    codec.push_back(std::move(c));
  }
  report["roundtrips"] = roundtrips;
  report["codec"] = codec;
  report["passed"] = ok;

  if (o.report_path.empty()) {
    out << report.dump(2) << '\n';
  } else {
    std::ofstream f(o.report_path);
    if (!f) throw InvalidInput("cannot write report to " + o.report_path);
    f << report.dump(2) << '\n';
    out << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- map

TennisBallConfig parse_lawn(const std::string& text) {
  TennisBallConfig a;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) a.lawn.insert(parse_int(tok, "lawn"));
  a.rounds = static_cast<int>(a.lawn.size());
  return a;
}

TennisBallConfig lawn_from_word(const DyckWord& d) {
  TennisBallConfig a;
  a.rounds = d.semilength() - 1;
  for (int ball = 1; ball <= 2 * a.rounds; ++ball) {
    if (d[static_cast<std::size_t>(ball)] == 'U') a.lawn.insert(ball);
  }
  return a;
}

std::string lawn_string(const TennisBallConfig& a) {
  std::string s;
  for (int b : a.lawn) {
    if (!s.empty()) s += ',';
    s += std::to_string(b);
  }
  return s;
}

std::string underlined_out(const UnderlinedDuckWord& u, bool json) {
  if (!json) return u.to_string();
  Json j;
  j["word"] = u.word.letters();
  j["underlines"] = u.underlines;
  return j.dump();
}

std::string trim(std::string s) {
  const auto ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

int cmd_map(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string input = trim(resolve_input(o.input));
  const bool json = o.format == "json";
  const std::string& d = o.direction;
  bool ok = true;
  if (d == "phi") {
    const HookConfig c = parse_hook_config(input);
    const Word3D w = phi(c);
    out << w.letters() << '\n';
    if (o.roundtrip) {
      const HookConfig back = phi_inverse(w);
      out << to_json(back).dump() << '\n';
      ok = back == c;
    }
  } else if (d == "phi-inv") {
    const Word3D w(input);
    const HookConfig c = phi_inverse(w);
    out << to_json(c).dump() << '\n';
    if (o.roundtrip) {
      const Word3D back = phi(c);
      out << back.letters() << '\n';
      ok = back == w;
    }
  } else if (d == "phi-prime") {
    const HookConfig c = parse_hook_config(input);
    const UnderlinedDuckWord u = phi_prime(c);
    out << underlined_out(u, json) << '\n';
    if (o.roundtrip) {
      const HookConfig back = phi_prime_inverse(u);
      out << to_json(back).dump() << '\n';
      ok = back == c;
    }
  } else if (d == "phi-prime-inv") {
    const UnderlinedDuckWord u = UnderlinedDuckWord::parse(input);
    const HookConfig c = phi_prime_inverse(u);
    out << to_json(c).dump() << '\n';
    if (o.roundtrip) {
      const UnderlinedDuckWord back = phi_prime(c);
      out << underlined_out(back, json) << '\n';
      ok = back == u;
    }
  } else if (d == "psi") {
    const TennisBallConfig a = parse_lawn(input);
    const DyckWord w = psi(a);
    out << w.letters() << '\n';
    if (o.roundtrip) {
      const TennisBallConfig back = lawn_from_word(w);
      out << lawn_string(back) << '\n';
      ok = back == a;
    }
  } else if (d == "rewrite") {
    const UnderlinedDuckWord u = UnderlinedDuckWord::parse(input);
    const RewrittenDuckWord r = u.underlines.empty() ? rewrite(u.word) : rewrite(u);
    out << r.to_string() << '\n';
    if (o.roundtrip) {
      const UnderlinedDuckWord back = decode(r);
      out << back.to_string() << '\n';
      ok = back.word == u.word;
    }
  } else {  // decode
    const RewrittenDuckWord r = RewrittenDuckWord::parse(input);
    const UnderlinedDuckWord u = decode(r);
    out << underlined_out(u, json) << '\n';
    if (o.roundtrip) {
      const RewrittenDuckWord back = rewrite(u);
      out << back.to_string() << '\n';
      ok = back == r;
    }
  }
  if (!ok) {
    err << "roundtrip mismatch\n";
    return kVerificationFailure;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- render

int cmd_render(const Options& o, std::ostream& out) {
  const HookConfig c = parse_hook_config(resolve_input(o.input));
  const ValidityReport v = check_valid(c);
  if (!v.valid) {
    throw InvalidInput(std::string("render: configuration fails condition (") + to_string(v.failed_condition) + ")");
  }
  RenderOptions ro;
  ro.labels = o.labels;
  out << (o.format == "tikz" ? render_tikz(c, ro) : render_svg(c, ro));
  return kSuccess;
}

// ---------------------------------------------------------------- enumerate / count

int arg_int(const Options& o, std::size_t idx, const char* what) {
  if (idx >= o.args.size()) throw InvalidInput(o.object + ": missing argument " + what);
  return parse_int(o.args[idx], what);
}

void require_args(const Options& o, std::size_t count, const char* usage) {
  if (o.args.size() != count) throw InvalidInput(o.object + ": usage: " + usage);
}

void check_bound(int value, int bound, const std::string& what) {
  if (value > bound) {
    throw ResourceLimit(what + " " + std::to_string(value) + " exceeds limit " + std::to_string(bound) +
                        " (raise with --limit)");
  }
}

/// Calls `emit` with the text and JSON form of every object; returns the count.
std::uint64_t walk_objects(const Options& o, const std::function<void(const std::string&, const Json&)>& emit) {
  std::uint64_t count = 0;
  auto send = [&](const std::string& text, const Json& j) {
    ++count;
    if (emit) emit(text, j);
  };
  const std::string& what = o.object;
  const int enum_bound = o.limit < 0 ? kDefaultEnumerationBound : o.limit;
  const int brute_bound = o.limit < 0 ? kDefaultBruteForceBound : o.limit;
  if (what == "av312") {
    require_args(o, 1, "av312 N");
    const int n = arg_int(o, 0, "N");
    check_bound(n, 3 * enum_bound, "n");
    for_each_av312(n, [&](const Permutation& p) {
      send(p.to_string(), Json(std::vector<int>(p.entries().begin(), p.entries().end())));
    });
  } else if (what == "dyck") {
    require_args(o, 1, "dyck K");
    const int k = arg_int(o, 0, "K");
    check_bound(k, 2 * enum_bound, "k");
    for_each_dyck(k, [&](const DyckWord& w) { send(w.letters(), w.letters()); });
  } else if (what == "3d-dyck") {
    require_args(o, 1, "3d-dyck K");
    const int k = arg_int(o, 0, "K");
    check_bound(k, enum_bound, "k");
    for_each_3d_dyck(k, [&](const Word3D& w) { send(w.letters(), w.letters()); });
  } else if (what == "underlined") {
    require_args(o, 2, "underlined K I");
    const int k = arg_int(o, 0, "K");
    check_bound(k, enum_bound, "k");
    for_each_underlined(k, arg_int(o, 1, "I"), [&](const UnderlinedDuckWord& u) {
      send(u.to_string(), Json{{"word", u.word.letters()}, {"underlines", u.underlines}});
    });
  } else if (what == "rewritten") {
    require_args(o, 2, "rewritten K I");
    const int k = arg_int(o, 0, "K");
    check_bound(k, enum_bound, "k");
    for_each_rewritten(k, arg_int(o, 1, "I"), [&](const RewrittenDuckWord& r) { send(r.to_string(), r.to_string()); });
  } else if (what == "vhc") {
    require_args(o, 1, "vhc PERM");
    const Permutation pi = Permutation::parse(o.args[0]);
    check_bound(pi.size(), brute_bound, "n");
    for (const HookConfig& c : enumerate_vhcs(pi)) {
      const Json j = to_json(c);
      send(j.dump(), j);
    }
  } else if (what == "redvhc") {
    if (o.args.empty() || o.args.size() > 1) throw InvalidInput("redvhc: usage: redvhc N [--hooks K]");
    const int n = arg_int(o, 0, "N");
    check_bound(n, brute_bound, "n");
    for (const HookConfig& c : enumerate_reduced_312_vhcs(n)) {
      if (o.hooks >= 0 && c.hook_count() != o.hooks) continue;
      const Json j = to_json(c);
      send(j.dump(), j);
    }
  } else {  // lawns
    require_args(o, 1, "lawns M");
    const int m = arg_int(o, 0, "M");
    check_bound(m, o.limit < 0 ? kDefaultTennisBound : o.limit, "m");
    for (const TennisBallConfig& a : reachable_lawns(m)) {
      send(lawn_string(a), Json(std::vector<int>(a.lawn.begin(), a.lawn.end())));
    }
  }
  return count;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.format == "json") {
    Json all = Json::array();
    walk_objects(o, [&](const std::string&, const Json& j) { all.push_back(j); });
    out << all.dump() << '\n';
  } else {
    walk_objects(o, [&](const std::string& text, const Json&) { out << text << '\n'; });
  }
  return kSuccess;
}

int cmd_count(const Options& o, std::ostream& out) {
  const Json key = cache_key("count", {{"object", o.object}, {"args", o.args}, {"hooks", o.hooks}, {"limit", o.limit}});
  const Json value = cached(o, key, [&] { return Json(walk_objects(o, nullptr)); });
  if (o.format == "json") {
    out << Json{{"object", o.object}, {"args", o.args}, {"count", value}}.dump() << '\n';
  } else {
    out << value.get<std::uint64_t>() << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.threads = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"Reduced valid hook configurations, 3D-Dyck words and their bijections", "vhc"};
  app.set_version_flag("--version", std::string(VHC_VERSION));
  app.require_subcommand(1);

  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", o.cache_dir, "Result cache directory")->envname("VHC_CACHE_DIR");
    sub->add_flag("--no-cache", o.no_cache, "Ignore the result cache");
  };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", o.limit, "Resource bound for the underlying enumeration")->check(CLI::NonNegativeNumber);
  };

  auto* tri = app.add_subcommand("triangle", "Print a count triangle");
  tri->add_option("kind", o.triangle_kind, "redvhc, duck or underlined")
      ->required()
      ->check(CLI::IsMember({"redvhc", "duck", "underlined"}));
  tri->add_option("--kmax", o.kmax, "Number of rows")->required();
  tri->add_option("--format", o.format, "csv, text or json")->check(CLI::IsMember({"csv", "text", "json"}));
  tri->add_option("--method", o.method, "transform, enumerate or brute (redvhc and underlined)")
      ->check(CLI::IsMember({"transform", "enumerate", "brute"}));
  tri->add_option("--threads", o.threads, "Worker threads for brute-force counting");
  add_limit(tri);
  add_cache(tri);

  auto* ver = app.add_subcommand("verify", "Check every identity, golden triangle and roundtrip");
  ver->add_option("--kmax", o.kmax, "Largest k")->required();
  ver->add_option("--brute-bound", o.brute_bound, "Largest n for brute-force hook enumeration");
  ver->add_option("--eq1-max", o.eq1_max, "Largest n for the binomial counting identity");
  ver->add_option("--roundtrip-max", o.roundtrip_max, "Largest k for exhaustive roundtrips");
  ver->add_option("--golden-dir", o.golden_dir, "Directory holding the golden CSV triangles");
  ver->add_option("--report", o.report_path, "Write the JSON report here instead of stdout");
  ver->add_option("--threads", o.threads, "Worker threads for brute-force counting");
  add_limit(ver);

  auto* map = app.add_subcommand("map", "Apply a bijection");
  map->add_option("direction", o.direction)
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inv", "phi-prime", "phi-prime-inv", "psi", "rewrite", "decode"}));
  map->add_option("input", o.input, "Input text, @file or - for stdin")->required();
  map->add_flag("--roundtrip", o.roundtrip, "Also print the inverse image of the result");
  map->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* ren = app.add_subcommand("render", "Draw a hook configuration");
  ren->add_option("config", o.input, "Configuration JSON, @file or - for stdin")->required();
  ren->add_option("--format", o.format, "svg or tikz")->check(CLI::IsMember({"svg", "tikz"}));
  ren->add_flag("--labels", o.labels, "Label points X, Y, Z by role");

  const std::vector<std::string> objects{"av312", "dyck", "3d-dyck", "underlined", "rewritten", "vhc", "redvhc", "lawns"};
  auto* en = app.add_subcommand("enumerate", "List words, permutations or configurations");
  auto* cnt = app.add_subcommand("count", "Count words, permutations or configurations");
  for (CLI::App* sub : {en, cnt}) {
    sub->add_option("object", o.object, "av312 N | dyck K | 3d-dyck K | underlined K I | rewritten K I | vhc PERM | "
                                        "redvhc N | lawns M")
        ->required()
        ->check(CLI::IsMember(objects));
    sub->add_option("args", o.args, "Object parameters");
    sub->add_option("--hooks", o.hooks, "Only configurations with this many hooks (redvhc)");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    add_limit(sub);
  }
  add_cache(cnt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << VHC_VERSION << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (tri->parsed()) return cmd_triangle(o, out);
    if (ver->parsed()) return cmd_verify(o, out, err);
    if (map->parsed()) return cmd_map(o, out, err);
    if (ren->parsed()) return cmd_render(o, out);
    if (en->parsed()) return cmd_enumerate(o, out);
    return cmd_count(o, out);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace vhc::cli
