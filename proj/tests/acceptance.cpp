// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vhc/bijections.hpp"
#include "vhc/cli.hpp"
#include "vhc/enumerative.hpp"
#include "vhc/hook_config.hpp"
#include "vhc/io.hpp"
#include "vhc/version.hpp"

using namespace vhc;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::filesystem::path kGolden(VHC_DEFAULT_GOLDEN_DIR);

std::string join(const std::vector<Integer>& row) {
  std::string s;
  for (const Integer& v : row) s += (s.empty() ? "" : ",") + to_string(v);
  return s;
}

Outcome golden_triangle() {
  const CliRun r = cli({"triangle", "redvhc", "--kmax", "7", "--no-cache"});
  if (r.code != 0) return {false, "triangle redvhc exited " + std::to_string(r.code) + ": " + r.err};
  std::istringstream in(r.out);
  const CountTriangle got = read_triangle_csv(in);
  const CountTriangle golden = read_triangle_csv(kGolden / "redvhc_triangle.csv");
  const std::vector<Integer> row7{40898, 511607, 2472322, 5999489, 7794646, 5182011, 1385670};
  if (got.kmax() != 7) return {false, "expected 7 rows"};
  if (got.row(7) != row7) return {false, "row 7 is " + join(got.row(7))};
  if (got != golden) return {false, "differs from golden triangle"};
  if (got != underlined_triangle(7, UnderlineMethod::Transform).reversed()) return {false, "CLI and library disagree"};
  return {true,
          "row 7 = " + join(got.row(7)) +
              "; the final entry equals 3D-Catalan(7) = 1385670"};
}

Outcome duck_golden() {
  const CliRun r = cli({"triangle", "duck", "--kmax", "7", "--no-cache"});
  if (r.code != 0) return {false, "triangle duck exited " + std::to_string(r.code)};
  std::istringstream in(r.out);
  const CountTriangle got = read_triangle_csv(in);
  const std::vector<Integer> row7{429, 14545, 127511, 408311, 527757, 266219, 40898};
  if (got.kmax() != 7 || got.row(7) != row7) return {false, "row 7 mismatch"};
  if (got != read_triangle_csv(kGolden / "duck_triangle.csv")) return {false, "differs from golden triangle"};
  return {true, "row 7 = " + join(got.row(7))};
}

Outcome brute_force() {
  const auto census = redvhc_census(kDefaultBruteForceBound);
  const CountTriangle transform = underlined_triangle(4, UnderlineMethod::Transform);
  int cells = 0;
  for (int k = 1; k <= 4; ++k) {
    for (int i = 0; i < k; ++i) {
      const int n = 3 * k - i;
      if (n > kDefaultBruteForceBound) continue;
      const auto it = census.find({k, n});
      const std::uint64_t counted = it == census.end() ? 0 : it->second;
      if (Integer(counted) != transform.at(k, i)) {
        return {false, "k=" + std::to_string(k) + " i=" + std::to_string(i) + ": enumerated " +
                           std::to_string(counted) + ", transform " + to_string(transform.at(k, i))};
      }
      ++cells;
    }
  }
  const bool named = transform.at(3, 2) == 14 && transform.at(2, 1) == 3 && transform.at(2, 0) == 5 &&
                     transform.at(1, 0) == 1 && transform.at(4, 3) == 84 && transform.at(4, 2) == 485;
  if (!named) return {false, "named cells differ"};
  return {true, std::to_string(cells) + " cells with 3k-i <= 10 agree"};
}

Outcome roundtrips() {
  std::size_t checks = 0;
  std::size_t objects = 0;
  for (int k = 1; k <= 4; ++k) {
    for (const RoundtripCheck& c : verify_roundtrips(k)) {
      ++checks;
      objects += c.words;
      if (!c.passed()) {
        return {false, c.map + " failed at k=" + std::to_string(c.k) + " i=" + std::to_string(c.i) + " (" +
                           std::to_string(c.failures) + " failures)"};
      }
    }
  }
  return {true, std::to_string(checks) + " (k,i) classes, " + std::to_string(objects) + " words, zero failures"};
}

Outcome counting_identity() {
  for (int n = 0; n <= 8; ++n) {
    const Eq1Report r = verify_eq1(n);
    if (!r.agree()) {
      return {false, "n=" + std::to_string(n) + ": " + std::to_string(r.lhs) + " != " + std::to_string(r.rhs)};
    }
  }
  return {true, "total VHCs equal the binomially weighted reduced sum for n <= 8"};
}

Outcome identities() {
  const IdentityReport r = verify_identities(7);
  for (const IdentityResult& id : r.identities) {
    if (!id.passed()) return {false, "identity " + std::to_string(id.id) + " (" + id.name + ") failed"};
  }
  return {r.passed(), std::to_string(r.identities.size()) + " identities hold for k <= 7"};
}

Outcome codec() {
  for (int k = 1; k <= 4; ++k) {
    const CountTriangle duck = duck_triangle(k);
    const CountTriangle underlined = binomial_transform(duck);
    std::size_t failures = 0;
    for_each_3d_dyck(k, [&](const Word3D& w) {
      const UnderlinedDuckWord u = canonical_underlining(w);
      const RewrittenDuckWord r = rewrite(u);
      if (!validate_rewritten(r) || decode(r) != u) ++failures;
    });
    std::vector<Integer> census(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      for_each_rewritten(k, i, [&](const RewrittenDuckWord& r) {
        ++census[static_cast<std::size_t>(i)];
        if (rewrite(decode(r)) != r) ++failures;
      });
    }
    if (failures) return {false, std::to_string(failures) + " roundtrip failures at k=" + std::to_string(k)};
    if (census != duck.row(k)) return {false, "rewritten census at k=" + std::to_string(k) + " is " + join(census)};
    for (int i = 0; i < k; ++i) {
      Integer sum = 0;
      for (int j = i; j < k; ++j) sum += binomial(j, i) * census[static_cast<std::size_t>(j)];
      if (sum != underlined.at(k, i)) return {false, "binomial transform of census differs at k=" + std::to_string(k)};
    }
  }
  return {true,
          "exhaustive roundtrip for k <= 4; the census of rewritten (k,i)-words is Duck(k,i), and its binomial "
          "transform is underlined-Duck(k,i)"};
}

Outcome tennis() {
  for (int k = 1; k <= 6; ++k) {
    if (Integer(reachable_lawns(k - 1).size()) != catalan(k)) return {false, "census differs at k=" + std::to_string(k)};
  }
  for (int n = 1; n <= 6; ++n) {
    if (tennis_ball_weighted(n, TennisMethod::Simulate) != tennis_ball_weighted(n, TennisMethod::ClosedForm)) {
      return {false, "weighted sum differs at n=" + std::to_string(n)};
    }
  }
  const Integer two = tennis_ball_weighted(2, TennisMethod::Simulate);
  const Integer three = tennis_ball_weighted(3, TennisMethod::Simulate);
  if (two != 23 || three != 131) return {false, "tb_2 = " + to_string(two) + ", tb_3 = " + to_string(three)};
  return {true, "lawn census = C_k for k <= 6; weighted sums agree for n <= 6 (23, 131 at n = 2, 3)"};
}

Outcome worked_examples() {
  const CliRun a = cli({"map", "phi-inv", "XXYYXXZYZZYZ"});
  const std::string maximal = R"({"perm":[3,2,4,1,7,8,6,9,10,11,5,12],"hooks":[[1,9],[3,5],[6,8],[10,12]]})"
                           "\n";
  if (a.code != 0 || a.out != maximal) return {false, "map phi-inv emitted " + a.out};
  const CliRun b = cli({"map", "phi-prime", R"({"perm":[3,2,1,5,6,4,8,9,7,10],"hooks":[[1,8],[2,4],[5,7],[8,10]]})",
                        "--format", "json"});
  if (b.code != 0 || b.out != "{\"word\":\"XXYYXZYXZZYZ\",\"underlines\":[4,11]}\n") {
    return {false, "map phi-prime emitted " + b.out};
  }
  return {true, "phi-inv gives the 12-point configuration; phi-prime gives XXYYXZYXZZYZ underlined at 4, 11"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"reduced VHC triangle to k = 7", golden_triangle},
      {"duck triangle to k = 7", duck_golden},
      {"brute-force cross-validation", brute_force},
      {"bijection roundtrips for k <= 4", roundtrips},
      {"VHC counting identity for n <= 8", counting_identity},
      {"identity suite for k <= 7", identities},
      {"rewriting codec for k <= 4", codec},
      {"tennis-ball process", tennis},
      {"worked examples", worked_examples},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << name << " -- " << o.detail
              << " (" << std::fixed << std::setprecision(2) << secs << " s)\n";
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (9 - failed) << "/9\n";
  return failed ? 1 : 0;
}
