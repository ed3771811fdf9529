#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "vhc/permutation.hpp"
#include "vhc/words.hpp"

namespace vhc {

/// A hook from the SW endpoint (sw, pi(sw)) up and right to the NE endpoint
/// (ne, pi(ne)). It occupies the vertical segment {sw} x [pi(sw), pi(ne)] and
/// the horizontal segment [sw, ne] x {pi(ne)}.
struct Hook {
  int sw;
  int ne;
  friend bool operator==(const Hook&, const Hook&) = default;
  friend auto operator<=>(const Hook&, const Hook&) = default;
};

struct Point {
  int x;
  int y;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A permutation together with a set of hooks, kept sorted by (sw, ne).
/// Construction checks each hook individually (indices in range, sw < ne,
/// pi(sw) < pi(ne)); whether the set is valid is check_valid's job.
class HookConfig {
 public:
  HookConfig() = default;
  HookConfig(Permutation perm, std::vector<Hook> hooks);

  const Permutation& perm() const { return perm_; }
  const std::vector<Hook>& hooks() const { return hooks_; }
  int size() const { return perm_.size(); }
  int hook_count() const { return static_cast<int>(hooks_.size()); }

  /// Position of the point at height `height` (C_vert).
  int position_at_height(int height) const { return perm_.position_of(height); }

  bool is_sw_endpoint(int position) const;
  bool is_ne_endpoint(int position) const;
  bool is_endpoint(int position) const { return is_sw_endpoint(position) || is_ne_endpoint(position); }
  /// The hook whose SW endpoint is at `position`, if any.
  std::optional<Hook> hook_from(int position) const;

  friend bool operator==(const HookConfig&, const HookConfig&) = default;
  friend auto operator<=>(const HookConfig&, const HookConfig&) = default;

 private:
  Permutation perm_;
  std::vector<Hook> hooks_;
};

enum class Condition { None, I, II, III };

const char* to_string(Condition c);

struct ValidityReport {
  bool valid = true;
  Condition failed_condition = Condition::None;
  /// Offending point: a descent top without a hook or an SW endpoint that is
  /// not a descent top (i), the point above a hook (ii), or the bad
  /// intersection point (iii). Absent for overlapping segments.
  std::optional<Point> point;
  std::optional<Hook> first_hook;
  std::optional<Hook> second_hook;
};

ValidityReport check_valid(const HookConfig& c);

/// Every point is a hook endpoint or a descent bottom. Throws
/// PreconditionViolation for an invalid configuration.
bool is_reduced(const HookConfig& c);

/// All valid hook configurations on `pi`, ordered lexicographically by the
/// vector of NE indices (hooks listed by SW index).
std::vector<HookConfig> enumerate_vhcs(const Permutation& pi);
std::size_t count_vhcs(const Permutation& pi);

/// The reduced members of enumerate_vhcs(pi), in the same order.
std::vector<HookConfig> enumerate_reduced_vhcs(const Permutation& pi);

struct Reduction {
  HookConfig config;
  /// 1-based positions of removed points in the input.
  std::set<int> removed;
};

/// Drops every point that is neither a descent bottom nor a hook endpoint and
/// renormalizes.
Reduction reduce(const HookConfig& c);

/// Full membership test for RedVHC(Av(312)).
bool is_reduced_312_vhc(const HookConfig& c);
/// Membership in RedVHC_k(Av_{3k}(312)) for k = hook count.
bool is_maximal_reduced_312_vhc(const HookConfig& c);

/// Endpoints read left to right: U for an SW endpoint, D for an NE endpoint.
/// Requires c in RedVHC_k(Av_{3k}(312)); throws InvalidInput otherwise.
DyckWord hooks_projection(const HookConfig& c);

inline constexpr int kDefaultBruteForceBound = 10;

/// counts[{k, n}] = |RedVHC_k(Av_n(312))| for every n <= n_max, by exhaustive
/// search. Work is split by first entry across `threads` workers and merged in
/// a fixed order.
std::map<std::pair<int, int>, std::uint64_t> redvhc_census(int n_max, unsigned threads = 1);

/// All members of RedVHC(Av_n(312)), grouped in Av_n lexicographic order.
std::vector<HookConfig> enumerate_reduced_312_vhcs(int n);

struct Eq1Report {
  int n = 0;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  /// |RedVHC(Av_r(312))| for r = 0..n.
  std::vector<std::uint64_t> reduced_counts;
  bool agree() const { return lhs == rhs; }
};

/// LHS = total VHCs over Av_n(312); RHS = sum_r |RedVHC(Av_r(312))| binom(n, r).
/// Throws ResourceLimit when n > bound.
Eq1Report verify_eq1(int n, int bound = kDefaultBruteForceBound);

}  // namespace vhc
