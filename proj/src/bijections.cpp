#include "vhc/bijections.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "vhc/error.hpp"

namespace vhc {

std::vector<PointRole> classify_heights(const HookConfig& c) {
  if (!is_maximal_reduced_312_vhc(c)) {
    throw InvalidInput("configuration is not in RedVHC_k(Av_3k(312))");
  }
  const DescentTable table = descent_table(c.perm());
  std::vector<PointRole> roles(static_cast<std::size_t>(c.size()));
  for (int p = 1; p <= c.size(); ++p) {
    const int labels = int{table.is_bottom(p)} + int{c.is_sw_endpoint(p)} + int{c.is_ne_endpoint(p)};
    if (labels != 1) {
      throw InvalidInput("point at position " + std::to_string(p) + " carries " +
                         std::to_string(labels) + " roles");
    }
    PointRole role = table.is_bottom(p)      ? PointRole::DescentBottom
                     : c.is_sw_endpoint(p) ? PointRole::SWEndpoint
                                           : PointRole::NEEndpoint;
    roles[static_cast<std::size_t>(c.perm().at(p) - 1)] = role;
  }
  return roles;
}

Word3D phi(const HookConfig& c) {
  std::string letters;
  for (PointRole role : classify_heights(c)) {
    switch (role) {
      case PointRole::DescentBottom: letters.push_back('X'); break;
      case PointRole::SWEndpoint: letters.push_back('Y'); break;
      case PointRole::NEEndpoint: letters.push_back('Z'); break;
    }
  }
  return Word3D(std::move(letters));
}

HookConfig phi_inverse(const Word3D& w) {
  // Endpoints are left-to-right maxima, so they appear in height order; each
  // SW endpoint is directly followed by its descent bottom, which is the
  // largest unused X-height below it.
  const int n = static_cast<int>(w.size());
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n));
  std::vector<int> unused_bottoms;  // ascending
  std::vector<int> position_of_height(static_cast<std::size_t>(n) + 1, 0);
  for (int h = 1; h <= n; ++h) {
    switch (w.at(h)) {
      case 'X':
        unused_bottoms.push_back(h);
        break;
      case 'Y': {
        perm.push_back(h);
        position_of_height[static_cast<std::size_t>(h)] = static_cast<int>(perm.size());
        // Prefix dominance guarantees an unused bottom below h.
        const int b = unused_bottoms.back();
        unused_bottoms.pop_back();
        perm.push_back(b);
        break;
      }
      default:
        perm.push_back(h);
        position_of_height[static_cast<std::size_t>(h)] = static_cast<int>(perm.size());
        break;
    }
  }
  std::vector<Hook> hooks;
  std::vector<int> open;  // heights of unmatched Y's
  for (int h = 1; h <= n; ++h) {
    if (w.at(h) == 'Y') {
      open.push_back(h);
    } else if (w.at(h) == 'Z') {
      hooks.push_back({position_of_height[static_cast<std::size_t>(open.back())],
                       position_of_height[static_cast<std::size_t>(h)]});
      open.pop_back();
    }
  }
  return HookConfig(Permutation(std::move(perm)), std::move(hooks));
}

namespace {

// Height key for points of the expanded configuration before normalization:
// original points are (value, 0); the r-th point inserted above value v is
// (v, r).
using HeightKey = std::pair<int, int>;

}  // namespace

Expansion expand(const HookConfig& c) {
  if (!is_reduced_312_vhc(c)) {
    throw InvalidInput("expand: configuration is not in RedVHC(Av(312))");
  }
  const Permutation& pi = c.perm();
  const DescentTable table = descent_table(pi);
  const std::size_t n = static_cast<std::size_t>(c.size());

  std::vector<HeightKey> keys;
  std::vector<int> new_position(n + 1, 0);
  std::vector<int> moved_sw(n + 1, 0);  // new SW position for hooks that move
  std::vector<std::size_t> inserted;    // indices into keys
  HeightKey last_endpoint{0, 0};

  for (int p = 1; p <= c.size(); ++p) {
    const HeightKey key{pi.at(p), 0};
    keys.push_back(key);
    new_position[static_cast<std::size_t>(p)] = static_cast<int>(keys.size());
    const bool sw = c.is_sw_endpoint(p);
    const bool ne = c.is_ne_endpoint(p);
    const bool bottom = table.is_bottom(p);
    if (ne) last_endpoint = key;
    if (sw && (ne || bottom)) {
      const HeightKey split{last_endpoint.first, last_endpoint.second + 1};
      keys.push_back(split);
      inserted.push_back(keys.size() - 1);
      moved_sw[static_cast<std::size_t>(p)] = static_cast<int>(keys.size());
      last_endpoint = split;
    } else if (sw) {
      last_endpoint = key;
    }
  }

  std::vector<HeightKey> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  auto rank = [&](const HeightKey& k) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()) + 1;
  };
  std::vector<int> values;
  values.reserve(keys.size());
  for (const HeightKey& k : keys) values.push_back(rank(k));

  Expansion result;
  for (std::size_t idx : inserted) result.inserted_heights.insert(values[idx]);
  std::vector<Hook> hooks;
  for (const Hook& h : c.hooks()) {
    const int moved = moved_sw[static_cast<std::size_t>(h.sw)];
    hooks.push_back({moved ? moved : new_position[static_cast<std::size_t>(h.sw)],
                     new_position[static_cast<std::size_t>(h.ne)]});
  }
  result.config = HookConfig(Permutation(std::move(values)), std::move(hooks));
  return result;
}

HookConfig contract(const HookConfig& expanded, const std::set<int>& inserted_heights) {
  const Permutation& pi = expanded.perm();
  const std::size_t n = static_cast<std::size_t>(expanded.size());
  std::vector<bool> removed(n + 1, false);
  for (int h : inserted_heights) {
    if (h < 1 || h > expanded.size()) {
      throw InvalidInput("contract: height " + std::to_string(h) + " out of range");
    }
    removed[static_cast<std::size_t>(pi.position_of(h))] = true;
  }
  std::vector<int> kept_values;
  std::vector<int> new_position(n + 1, 0);
  for (int p = 1; p <= expanded.size(); ++p) {
    if (removed[static_cast<std::size_t>(p)]) continue;
    kept_values.push_back(pi.at(p));
    new_position[static_cast<std::size_t>(p)] = static_cast<int>(kept_values.size());
  }
  std::vector<Hook> hooks;
  for (const Hook& h : expanded.hooks()) {
    if (removed[static_cast<std::size_t>(h.ne)]) {
      throw InvalidInput("contract: marked point at position " + std::to_string(h.ne) +
                         " is an NE endpoint");
    }
    int sw = h.sw;
    if (removed[static_cast<std::size_t>(sw)]) {
      --sw;
      if (sw < 1 || removed[static_cast<std::size_t>(sw)] || expanded.is_sw_endpoint(sw)) {
        throw InvalidInput("contract: no reattachment point left of position " + std::to_string(h.sw));
      }
    }
    hooks.push_back({new_position[static_cast<std::size_t>(sw)], new_position[static_cast<std::size_t>(h.ne)]});
  }
  for (int p = 1; p <= expanded.size(); ++p) {
    if (removed[static_cast<std::size_t>(p)] && !expanded.is_sw_endpoint(p)) {
      throw InvalidInput("contract: marked point at position " + std::to_string(p) +
                         " is not an SW endpoint");
    }
  }
  return HookConfig(normalize(kept_values), std::move(hooks));
}

UnderlinedDuckWord phi_prime(const HookConfig& c) {
  const Expansion e = expand(c);
  UnderlinedDuckWord u{phi(e.config), {e.inserted_heights.begin(), e.inserted_heights.end()}};
  return u;
}

HookConfig phi_prime_inverse(const UnderlinedDuckWord& u) {
  if (!validate_underlined(u)) {
    throw InvalidInput("phi_prime_inverse: not an underlined duck word: " + u.to_string());
  }
  return contract(phi_inverse(u.word), {u.underlines.begin(), u.underlines.end()});
}

std::vector<TennisBallConfig> reachable_lawns(int m) {
  if (m < 0 || m > 31) throw InvalidInput("tennis ball rounds out of range");
  std::set<std::uint64_t> rooms{0};
  for (int t = 1; t <= m; ++t) {
    std::set<std::uint64_t> next;
    for (std::uint64_t room : rooms) {
      const std::uint64_t full = room | (std::uint64_t{1} << (2 * t - 1)) | (std::uint64_t{1} << (2 * t));
      for (int ball = 1; ball <= 2 * t; ++ball) {
        const std::uint64_t bit = std::uint64_t{1} << ball;
        if (full & bit) next.insert(full & ~bit);
      }
    }
    rooms = std::move(next);
  }
  std::vector<TennisBallConfig> out;
  for (std::uint64_t room : rooms) {
    TennisBallConfig a{m, {}};
    for (int ball = 1; ball <= 2 * m; ++ball) {
      if (!(room & (std::uint64_t{1} << ball))) a.lawn.insert(ball);
    }
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_reachable(const TennisBallConfig& a) {
  if (a.rounds < 0 || static_cast<int>(a.lawn.size()) != a.rounds) return false;
  if (!a.lawn.empty() && (*a.lawn.begin() < 1 || *a.lawn.rbegin() > 2 * a.rounds)) return false;
  const auto all = reachable_lawns(a.rounds);
  return std::binary_search(all.begin(), all.end(), a);
}

DyckWord psi(const TennisBallConfig& a) {
  if (!is_reachable(a)) throw InvalidInput("psi: lawn is not reachable");
  std::string letters = "U";
  for (int ball = 1; ball <= 2 * a.rounds; ++ball) letters.push_back(a.lawn.count(ball) ? 'U' : 'D');
  letters.push_back('D');
  return DyckWord(std::move(letters));
}

std::vector<RoundtripCheck> verify_roundtrips(int k) {
  if (k < 1) throw InvalidInput("verify_roundtrips: k must be positive");
  std::vector<RoundtripCheck> out;
  for (int i = 0; i < k; ++i) {
    const int n = 3 * k - i;
    RoundtripCheck check{i == 0 ? "phi" : "phi_prime", k, i};
    std::set<std::string> images;
    for (const HookConfig& c : enumerate_reduced_312_vhcs(n)) {
      if (c.hook_count() != k) continue;
      ++check.configurations;
      try {
        if (i == 0) {
          const Word3D w = phi(c);
          images.insert(w.letters());
          if (phi_inverse(w) != c) ++check.failures;
        } else {
          const UnderlinedDuckWord u = phi_prime(c);
          images.insert(u.to_string());
          if (u.i() != i || phi_prime_inverse(u) != c) ++check.failures;
        }
      } catch (const std::exception&) {
        ++check.failures;
      }
    }
    if (images.size() != check.configurations) ++check.failures;
    auto back = [&](const std::string& text, auto&& forward) {
      ++check.words;
      try {
        if (!forward()) ++check.failures;
      } catch (const std::exception&) {
        ++check.failures;
      }
      if (!images.count(text)) ++check.failures;
    };
    if (i == 0) {
      for_each_3d_dyck(k, [&](const Word3D& w) {
        back(w.letters(), [&] { return phi(phi_inverse(w)) == w; });
      });
    } else {
      for_each_underlined(k, i, [&](const UnderlinedDuckWord& u) {
        back(u.to_string(), [&] { return phi_prime(phi_prime_inverse(u)) == u; });
      });
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace vhc
