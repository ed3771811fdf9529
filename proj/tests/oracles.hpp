#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// beyond plain data types, so the tests compare two independent computations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // one-line, values 1..n
using HookList = std::vector<std::pair<int, int>>;  // 1-based (sw, ne)

inline std::vector<Perm> all_perms(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Every length-|sigma| subsequence, normalized and compared.
inline bool contains(const Perm& pi, const Perm& sigma) {
  const int n = static_cast<int>(pi.size());
  const int m = static_cast<int>(sigma.size());
  if (m > n) return false;
  if (m == 0) return true;
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + m, true);
  do {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) sub.push_back(pi[static_cast<std::size_t>(i)]);
    }
    bool same = true;
    for (int a = 0; a < m && same; ++a) {
      for (int b = 0; b < m && same; ++b) {
        same = (sub[static_cast<std::size_t>(a)] < sub[static_cast<std::size_t>(b)]) ==
               (sigma[static_cast<std::size_t>(a)] < sigma[static_cast<std::size_t>(b)]);
      }
    }
    if (same) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline bool avoids_312(const Perm& pi) {
  const std::size_t n = pi.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (pi[b] < pi[c] && pi[c] < pi[a]) return false;
  return true;
}

inline std::vector<Perm> av312(int n) {
  std::vector<Perm> out;
  for (const Perm& p : all_perms(n)) {
    if (avoids_312(p)) out.push_back(p);
  }
  return out;
}

inline std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
  return c[static_cast<std::size_t>(n)];
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// ------------------------------------------------------------------ hooks

/// Cells of the hook drawn on the doubled grid, so that unit segments have a
/// midpoint cell and crossings land on cells.
inline std::set<std::pair<int, int>> hook_cells(const Perm& pi, std::pair<int, int> h) {
  const int a = h.first, b = h.second;
  const int ya = pi[static_cast<std::size_t>(a - 1)], yb = pi[static_cast<std::size_t>(b - 1)];
  std::set<std::pair<int, int>> cells;
  for (int y = 2 * ya; y <= 2 * yb; ++y) cells.insert({2 * a, y});
  for (int x = 2 * a; x <= 2 * b; ++x) cells.insert({x, 2 * yb});
  return cells;
}

inline bool is_valid(const Perm& pi, const HookList& hooks) {
  const int n = static_cast<int>(pi.size());
  auto at = [&](int i) { return pi[static_cast<std::size_t>(i - 1)]; };
  std::multiset<int> sws;
  for (auto [a, b] : hooks) sws.insert(a);
  std::set<int> tops;
  for (int i = 1; i < n; ++i) {
    if (at(i) > at(i + 1)) tops.insert(i);
  }
  if (std::set<int>(sws.begin(), sws.end()) != tops) return false;
  for (auto [a, b] : hooks) {
    for (int l = a + 1; l < b; ++l) {
      if (at(l) > at(b)) return false;
    }
  }
  for (std::size_t s = 0; s < hooks.size(); ++s) {
    for (std::size_t t = s + 1; t < hooks.size(); ++t) {
      const auto cs = hook_cells(pi, hooks[s]);
      const auto ct = hook_cells(pi, hooks[t]);
      std::vector<std::pair<int, int>> common;
      std::set_intersection(cs.begin(), cs.end(), ct.begin(), ct.end(), std::back_inserter(common));
      if (common.empty()) continue;
      if (common.size() > 1) return false;
      const auto [x, y] = common[0];
      if (x % 2 || y % 2 || at(x / 2) != y / 2) return false;
      const int p = x / 2;
      auto touches = [&](std::pair<int, int> h) { return h.first == p || h.second == p; };
      if (!touches(hooks[s]) || !touches(hooks[t])) return false;
    }
  }
  return true;
}

/// All valid hook sets on pi, by trying every subset of candidate hooks.
inline std::vector<HookList> all_vhcs(const Perm& pi) {
  const int n = static_cast<int>(pi.size());
  HookList candidates;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (pi[static_cast<std::size_t>(a - 1)] < pi[static_cast<std::size_t>(b - 1)]) candidates.push_back({a, b});
  int descents = 0;
  for (int i = 1; i < n; ++i) descents += pi[static_cast<std::size_t>(i - 1)] > pi[static_cast<std::size_t>(i)];
  std::vector<HookList> out;
  const std::size_t m = candidates.size();
  // Condition (i) forces one hook per descent top.
  const int size = descents;
  if (size > static_cast<int>(m)) return out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    HookList hooks;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) hooks.push_back(candidates[i]);
    if (is_valid(pi, hooks)) out.push_back(hooks);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline bool is_reduced(const Perm& pi, const HookList& hooks) {
  const int n = static_cast<int>(pi.size());
  for (int p = 1; p <= n; ++p) {
    bool ok = p > 1 && pi[static_cast<std::size_t>(p - 2)] > pi[static_cast<std::size_t>(p - 1)];
    for (auto [a, b] : hooks) ok = ok || a == p || b == p;
    if (!ok) return false;
  }
  return true;
}

/// counts[{k, n}] = number of reduced VHCs with k hooks over Av_n(312).
inline std::map<std::pair<int, int>, std::uint64_t> reduced_census(int n_max) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (int n = 0; n <= n_max; ++n) {
    for (const Perm& pi : av312(n)) {
      for (const HookList& h : all_vhcs(pi)) {
        if (is_reduced(pi, h)) ++out[{static_cast<int>(h.size()), n}];
      }
    }
  }
  return out;
}

// ------------------------------------------------------------------ words

/// Every arrangement of k X's, k Y's, k Z's filtered by prefix dominance.
inline std::vector<std::string> dyck3(int k) {
  std::string s = std::string(static_cast<std::size_t>(k), 'X') + std::string(static_cast<std::size_t>(k), 'Y') +
                  std::string(static_cast<std::size_t>(k), 'Z');
  std::vector<std::string> out;
  do {
    int x = 0, y = 0, z = 0;
    bool ok = true;
    for (char c : s) {
      x += c == 'X';
      y += c == 'Y';
      z += c == 'Z';
      ok = ok && x >= y && y >= z;
    }
    if (ok) out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

inline std::vector<std::string> dyck(int k) {
  std::string s = std::string(static_cast<std::size_t>(k), 'D') + std::string(static_cast<std::size_t>(k), 'U');
  std::sort(s.begin(), s.end());
  std::vector<std::string> out;
  do {
    int h = 0;
    bool ok = true;
    for (char c : s) {
      h += c == 'U' ? 1 : -1;
      ok = ok && h >= 0;
    }
    if (ok) out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline int duck_index(const std::string& w) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += w[i] == 'Y' && (i == 0 || w[i - 1] != 'X');
  return d;
}

/// Duck_{k,i} by classifying every word of dyck3(k).
inline std::vector<std::uint64_t> duck_row(int k) {
  std::vector<std::uint64_t> row(static_cast<std::size_t>(std::max(k, 1)), 0);
  for (const auto& w : dyck3(k)) ++row[static_cast<std::size_t>(duck_index(w))];
  return row;
}

/// underlined-Duck_{k,i}: choose i of the duck_index eligible Y's.
inline std::vector<std::uint64_t> underlined_row(int k) {
  std::vector<std::uint64_t> row(static_cast<std::size_t>(std::max(k, 1)), 0);
  for (const auto& w : dyck3(k)) {
    const int m = duck_index(w);
    for (int i = 0; i <= m; ++i) row[static_cast<std::size_t>(i)] += binom(m, i);
  }
  return row;
}

// ------------------------------------------------------------------ tennis balls

/// Every lawn reachable after m rounds, by following each sequence of throws.
inline std::set<std::set<int>> lawns(int m) {
  std::set<std::set<int>> out;
  auto rec = [&](auto&& self, int round, std::vector<int> room, std::set<int> lawn) -> void {
    if (round > m) {
      out.insert(lawn);
      return;
    }
    room.push_back(2 * round - 1);
    room.push_back(2 * round);
    for (std::size_t i = 0; i < room.size(); ++i) {
      std::vector<int> r = room;
      std::set<int> l = lawn;
      l.insert(r[i]);
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
      self(self, round + 1, r, l);
    }
  };
  rec(rec, 1, {}, {});
  return out;
}

inline std::uint64_t weighted_lawns(int m) {
  std::uint64_t total = 0;
  for (const auto& l : lawns(m))
    for (int b : l) total += static_cast<std::uint64_t>(b);
  return total;
}

}  // namespace oracle
