#include "vhc/hook_config.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "vhc/error.hpp"

namespace vhc {

HookConfig::HookConfig(Permutation perm, std::vector<Hook> hooks)
    : perm_(std::move(perm)), hooks_(std::move(hooks)) {
  const int n = perm_.size();
  for (const Hook& h : hooks_) {
    if (h.sw < 1 || h.ne > n || h.sw >= h.ne) {
      throw InvalidInput("malformed hook (" + std::to_string(h.sw) + "," + std::to_string(h.ne) +
                         ") on a permutation of size " + std::to_string(n));
    }
    if (perm_.at(h.sw) >= perm_.at(h.ne)) {
      throw InvalidInput("hook (" + std::to_string(h.sw) + "," + std::to_string(h.ne) +
                         ") does not go up and to the right");
    }
  }
  std::sort(hooks_.begin(), hooks_.end());
}

bool HookConfig::is_sw_endpoint(int position) const {
  return std::any_of(hooks_.begin(), hooks_.end(), [&](const Hook& h) { return h.sw == position; });
}

bool HookConfig::is_ne_endpoint(int position) const {
  return std::any_of(hooks_.begin(), hooks_.end(), [&](const Hook& h) { return h.ne == position; });
}

std::optional<Hook> HookConfig::hook_from(int position) const {
  for (const Hook& h : hooks_) {
    if (h.sw == position) return h;
  }
  return std::nullopt;
}

const char* to_string(Condition c) {
  switch (c) {
    case Condition::None: return "none";
    case Condition::I: return "i";
    case Condition::II: return "ii";
    case Condition::III: return "iii";
  }
  return "?";
}

namespace {

// Closed axis-aligned segment with x0 <= x1, y0 <= y1.
struct Segment {
  int x0, y0, x1, y1;
};

std::pair<Segment, Segment> hook_segments(const Permutation& pi, const Hook& h) {
  const int top = pi.at(h.ne);
  return {Segment{h.sw, pi.at(h.sw), h.sw, top}, Segment{h.sw, top, h.ne, top}};
}

enum class Meet { Disjoint, Point, Overlap };

Meet meet(const Segment& a, const Segment& b, Point& where) {
  const int x0 = std::max(a.x0, b.x0);
  const int x1 = std::min(a.x1, b.x1);
  const int y0 = std::max(a.y0, b.y0);
  const int y1 = std::min(a.y1, b.y1);
  if (x0 > x1 || y0 > y1) return Meet::Disjoint;
  if (x0 == x1 && y0 == y1) {
    where = {x0, y0};
    return Meet::Point;
  }
  return Meet::Overlap;
}

bool is_endpoint_of(const Permutation& pi, const Hook& h, const Point& p) {
  return (p.x == h.sw && p.y == pi.at(h.sw)) || (p.x == h.ne && p.y == pi.at(h.ne));
}

// Condition (iii) for one pair. Returns false and fills `where` (when the
// problem is a single point) on violation.
bool hooks_compatible(const Permutation& pi, const Hook& g, const Hook& h, std::optional<Point>& where) {
  const auto [gv, gh] = hook_segments(pi, g);
  const auto [hv, hh] = hook_segments(pi, h);
  for (const Segment& a : {gv, gh}) {
    for (const Segment& b : {hv, hh}) {
      Point p{};
      switch (meet(a, b, p)) {
        case Meet::Disjoint:
          break;
        case Meet::Overlap:
          where.reset();
          return false;
        case Meet::Point:
          if (!(is_endpoint_of(pi, g, p) && is_endpoint_of(pi, h, p))) {
            where = p;
            return false;
          }
          break;
      }
    }
  }
  return true;
}

// Condition (ii): nothing strictly between the endpoint columns rises above
// the NE endpoint.
std::optional<int> point_above(const Permutation& pi, const Hook& h) {
  const int top = pi.at(h.ne);
  for (int l = h.sw + 1; l < h.ne; ++l) {
    if (pi.at(l) > top) return l;
  }
  return std::nullopt;
}

}  // namespace

ValidityReport check_valid(const HookConfig& c) {
  const Permutation& pi = c.perm();
  const DescentTable table = descent_table(pi);
  ValidityReport report;
  auto fail = [&](Condition cond) {
    report.valid = false;
    report.failed_condition = cond;
    return report;
  };

  // (i) SW endpoints are exactly the descent tops.
  for (const Descent& d : table.descents) {
    if (!c.is_sw_endpoint(d.top_index)) {
      report.point = Point{d.top_index, pi.at(d.top_index)};
      return fail(Condition::I);
    }
  }
  for (const Hook& h : c.hooks()) {
    if (!table.is_top(h.sw)) {
      report.point = Point{h.sw, pi.at(h.sw)};
      report.first_hook = h;
      return fail(Condition::I);
    }
  }

  // (ii)
  for (const Hook& h : c.hooks()) {
    if (auto l = point_above(pi, h)) {
      report.point = Point{*l, pi.at(*l)};
      report.first_hook = h;
      return fail(Condition::II);
    }
  }

  // (iii) Hooks may only meet at plot points that are endpoints of both.
  const auto& hooks = c.hooks();
  for (std::size_t a = 0; a < hooks.size(); ++a) {
    for (std::size_t b = a + 1; b < hooks.size(); ++b) {
      std::optional<Point> where;
      if (!hooks_compatible(pi, hooks[a], hooks[b], where)) {
        report.point = where;
        report.first_hook = hooks[a];
        report.second_hook = hooks[b];
        return fail(Condition::III);
      }
    }
  }
  return report;
}

bool is_reduced(const HookConfig& c) {
  if (!check_valid(c).valid) {
    throw PreconditionViolation("is_reduced: configuration is not valid");
  }
  const DescentTable table = descent_table(c.perm());
  for (int p = 1; p <= c.size(); ++p) {
    if (!c.is_endpoint(p) && !table.is_bottom(p)) return false;
  }
  return true;
}

namespace {

// Backtracking over NE choices, one descent top at a time, NE index ascending.
class VhcSearch {
 public:
  explicit VhcSearch(const Permutation& pi) : pi_(pi) {
    for (const Descent& d : descent_table(pi).descents) tops_.push_back(d.top_index);
    chosen_.reserve(tops_.size());
  }

  template <typename Visit>
  void run(Visit&& visit) {
    step(0, visit);
  }

 private:
  template <typename Visit>
  void step(std::size_t t, Visit& visit) {
    if (t == tops_.size()) {
      visit(chosen_);
      return;
    }
    const int a = tops_[t];
    const int base = pi_.at(a);
    int between_max = 0;
    for (int b = a + 1; b <= pi_.size(); ++b) {
      const int v = pi_.at(b);
      if (v > base && v > between_max) {
        const Hook h{a, b};
        bool ok = true;
        std::optional<Point> where;
        for (const Hook& g : chosen_) {
          if (!hooks_compatible(pi_, g, h, where)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          chosen_.push_back(h);
          step(t + 1, visit);
          chosen_.pop_back();
        }
      }
      between_max = std::max(between_max, v);
    }
  }

  const Permutation& pi_;
  std::vector<int> tops_;
  std::vector<Hook> chosen_;
};

bool all_points_covered(const Permutation& pi, const DescentTable& table, const std::vector<Hook>& hooks) {
  std::vector<bool> covered(static_cast<std::size_t>(pi.size()) + 1, false);
  for (const Descent& d : table.descents) covered[static_cast<std::size_t>(d.bottom_index)] = true;
  for (const Hook& h : hooks) {
    covered[static_cast<std::size_t>(h.sw)] = true;
    covered[static_cast<std::size_t>(h.ne)] = true;
  }
  return std::all_of(covered.begin() + 1, covered.end(), [](bool b) { return b; });
}

// Cheap necessary condition for a reduced VHC: every point that is neither a
// descent top nor a descent bottom must be an NE endpoint, and each hook
// supplies one NE endpoint.
bool may_carry_reduced_vhc(const Permutation& pi, const DescentTable& table) {
  int plain = 0;
  for (int p = 1; p <= pi.size(); ++p) {
    if (!table.is_top(p) && !table.is_bottom(p)) ++plain;
  }
  return plain <= static_cast<int>(table.size());
}

}  // namespace

std::vector<HookConfig> enumerate_vhcs(const Permutation& pi) {
  std::vector<HookConfig> out;
  VhcSearch(pi).run([&](const std::vector<Hook>& hooks) { out.emplace_back(pi, hooks); });
  return out;
}

std::size_t count_vhcs(const Permutation& pi) {
  std::size_t count = 0;
  VhcSearch(pi).run([&](const std::vector<Hook>&) { ++count; });
  return count;
}

std::vector<HookConfig> enumerate_reduced_vhcs(const Permutation& pi) {
  std::vector<HookConfig> out;
  const DescentTable table = descent_table(pi);
  if (!may_carry_reduced_vhc(pi, table)) return out;
  VhcSearch(pi).run([&](const std::vector<Hook>& hooks) {
    if (all_points_covered(pi, table, hooks)) out.emplace_back(pi, hooks);
  });
  return out;
}

Reduction reduce(const HookConfig& c) {
  if (!check_valid(c).valid) {
    throw PreconditionViolation("reduce: configuration is not valid");
  }
  const DescentTable table = descent_table(c.perm());
  Reduction result;
  std::vector<int> kept_values;
  std::vector<int> new_position(static_cast<std::size_t>(c.size()) + 1, 0);
  for (int p = 1; p <= c.size(); ++p) {
    if (c.is_endpoint(p) || table.is_bottom(p)) {
      kept_values.push_back(c.perm().at(p));
      new_position[static_cast<std::size_t>(p)] = static_cast<int>(kept_values.size());
    } else {
      result.removed.insert(p);
    }
  }
  std::vector<Hook> hooks;
  for (const Hook& h : c.hooks()) {
    hooks.push_back({new_position[static_cast<std::size_t>(h.sw)], new_position[static_cast<std::size_t>(h.ne)]});
  }
  result.config = HookConfig(normalize(kept_values), std::move(hooks));
  return result;
}

bool is_reduced_312_vhc(const HookConfig& c) {
  return check_valid(c).valid && avoids_312(c.perm()) && is_reduced(c);
}

bool is_maximal_reduced_312_vhc(const HookConfig& c) {
  return c.size() == 3 * c.hook_count() && is_reduced_312_vhc(c);
}

DyckWord hooks_projection(const HookConfig& c) {
  if (!is_maximal_reduced_312_vhc(c)) {
    throw InvalidInput("hooks_projection: configuration is not in RedVHC_k(Av_3k(312))");
  }
  std::string letters;
  for (int p = 1; p <= c.size(); ++p) {
    if (c.is_sw_endpoint(p)) letters.push_back('U');
    if (c.is_ne_endpoint(p)) letters.push_back('D');
  }
  return DyckWord(std::move(letters));
}

std::map<std::pair<int, int>, std::uint64_t> redvhc_census(int n_max, unsigned threads) {
  std::map<std::pair<int, int>, std::uint64_t> counts;
  counts[{0, 0}] = 1;  // the empty configuration
  threads = std::max(1u, threads);
  for (int n = 1; n <= n_max; ++n) {
    // Slot f - 1 holds the hook-count histogram for permutations starting with f.
    std::vector<std::map<int, std::uint64_t>> partial(static_cast<std::size_t>(n));
    std::atomic<int> next{1};
    auto worker = [&] {
      for (int f = next++; f <= n; f = next++) {
        auto& slot = partial[static_cast<std::size_t>(f - 1)];
        for_each_av312_with_first(n, f, [&](const Permutation& pi) {
          for (const HookConfig& c : enumerate_reduced_vhcs(pi)) ++slot[c.hook_count()];
        });
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (const auto& slot : partial) {
      for (const auto& [k, count] : slot) counts[{k, n}] += count;
    }
  }
  return counts;
}

std::vector<HookConfig> enumerate_reduced_312_vhcs(int n) {
  std::vector<HookConfig> out;
  for_each_av312(n, [&](const Permutation& pi) {
    for (HookConfig& c : enumerate_reduced_vhcs(pi)) out.push_back(std::move(c));
  });
  return out;
}

Eq1Report verify_eq1(int n, int bound) {
  if (n < 0) throw InvalidInput("verify_eq1: negative n");
  if (n > bound) {
    throw ResourceLimit("verify_eq1: n = " + std::to_string(n) + " exceeds brute-force bound " +
                        std::to_string(bound));
  }
  Eq1Report report;
  report.n = n;
  for_each_av312(n, [&](const Permutation& pi) { report.lhs += count_vhcs(pi); });

  const auto census = redvhc_census(n);
  report.reduced_counts.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [key, count] : census) report.reduced_counts[static_cast<std::size_t>(key.second)] += count;

  std::uint64_t binom = 1;  // binom(n, r)
  for (int r = 0; r <= n; ++r) {
    report.rhs += report.reduced_counts[static_cast<std::size_t>(r)] * binom;
    binom = binom * static_cast<std::uint64_t>(n - r) / static_cast<std::uint64_t>(r + 1);
  }
  return report;
}

}  // namespace vhc
