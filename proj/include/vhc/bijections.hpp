#pragma once

#include <set>
#include <string>
#include <vector>

#include "vhc/hook_config.hpp"
#include "vhc/words.hpp"

namespace vhc {

enum class PointRole { DescentBottom, SWEndpoint, NEEndpoint };

/// roles[h - 1] is the role of the point at height h. Only meaningful for
/// RedVHC_k(Av_3k(312)), where each point has exactly one role; throws
/// InvalidInput otherwise.
std::vector<PointRole> classify_heights(const HookConfig& c);

/// Reads heights bottom to top: X for a descent bottom, Y for an SW endpoint,
/// Z for an NE endpoint. Requires c in RedVHC_k(Av_3k(312)).
Word3D phi(const HookConfig& c);

/// The unique configuration in RedVHC_k(Av_3k(312)) with phi(C) = w.
HookConfig phi_inverse(const Word3D& w);

struct Expansion {
  HookConfig config;
  /// Heights, in the expanded configuration, of the inserted points.
  std::set<int> inserted_heights;
};

/// Splits every point that is an SW endpoint and also an NE endpoint or a
/// descent bottom: a new point goes one column to its right, just above the
/// latest hook endpoint, and takes over the SW end of the hook. Maps
/// RedVHC_k(Av_{3k-i}(312)) into RedVHC_k(Av_3k(312)).
Expansion expand(const HookConfig& c);

/// Removes the points at `inserted_heights`; each hook that started at a
/// removed point is reattached to the point one column to its left.
HookConfig contract(const HookConfig& expanded, const std::set<int>& inserted_heights);

/// phi of the expansion, with the Y's of inserted points underlined.
UnderlinedDuckWord phi_prime(const HookConfig& c);
HookConfig phi_prime_inverse(const UnderlinedDuckWord& u);

/// Lawn contents after `rounds` rounds of the two-in, one-out ball process.
struct TennisBallConfig {
  int rounds = 0;
  std::set<int> lawn;
  friend bool operator==(const TennisBallConfig&, const TennisBallConfig&) = default;
  friend auto operator<=>(const TennisBallConfig&, const TennisBallConfig&) = default;
};

/// All reachable lawns after m rounds, in increasing order. Simulates the
/// process round by round over the set of distinct room states.
std::vector<TennisBallConfig> reachable_lawns(int m);
bool is_reachable(const TennisBallConfig& a);

/// U, then for each ball 1..2m a U if it is on the lawn and D otherwise, then
/// a closing D. Throws InvalidInput for an unreachable lawn.
DyckWord psi(const TennisBallConfig& a);

struct RoundtripCheck {
  std::string map;  // "phi" or "phi_prime"
  int k = 0;
  int i = 0;
  std::size_t configurations = 0;
  std::size_t words = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0 && configurations == words; }
};

/// Exhaustive roundtrips at k: phi against Dyck^3_k, then phi_prime against
/// the (k, i)-underlined duck words for each i. Both directions are checked
/// on every element, and the two sides must have equal size.
std::vector<RoundtripCheck> verify_roundtrips(int k);

}  // namespace vhc
