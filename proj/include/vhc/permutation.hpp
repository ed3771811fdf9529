#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vhc {

/// A permutation of [n] in one-line notation. Positions and values are
/// 1-based to match plot coordinates: the point of position i is (i, at(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `entries` is a permutation of {1, ..., n}.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries);

  static Permutation identity(int n);

  /// Space-separated integers, or a digit string such as "3215647" when n <= 9.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int at(int position) const { return entries_[static_cast<std::size_t>(position - 1)]; }
  std::span<const int> entries() const { return entries_; }

  /// position_of(v) is the position holding value v.
  int position_of(int value) const;
  Permutation inverse() const;

  /// "3 2 1 5 6 4 7"
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Replaces the i-th smallest entry by i. Throws InvalidInput on duplicates.
Permutation normalize(std::span<const int> seq);

/// True iff some subsequence of `pi` is order-isomorphic to `sigma`.
/// Generic backtracking search.
bool contains_pattern(const Permutation& pi, const Permutation& sigma);
inline bool avoids(const Permutation& pi, const Permutation& sigma) {
  return !contains_pattern(pi, sigma);
}

/// Linear-time 312 test: pi avoids 312 iff its inverse is stack-sortable.
bool avoids_312(const Permutation& pi);

struct Descent {
  int top_index;
  int bottom_index;
  friend bool operator==(const Descent&, const Descent&) = default;
};

/// Descents of a permutation in increasing index order, with top heights
/// t_i, bottom heights b_i and the bottom-height set BH.
struct DescentTable {
  std::vector<Descent> descents;
  std::vector<int> top_heights;
  std::vector<int> bottom_heights;
  /// Sorted ascending.
  std::vector<int> bottom_height_set;

  std::size_t size() const { return descents.size(); }
  bool empty() const { return descents.empty(); }
  /// BH_{i}: bottoms b_j for j >= i (1-based i), sorted ascending.
  std::vector<int> bottom_heights_from(std::size_t i) const;
  bool is_top(int position) const;
  bool is_bottom(int position) const;
};

DescentTable descent_table(const Permutation& pi);

/// Positions i with pi(j) < pi(i) for all j < i, ascending.
std::vector<int> left_to_right_maxima(const Permutation& pi);

/// Visits Av_n(312) in lexicographic order of one-line notation.
void for_each_av312(int n, const std::function<void(const Permutation&)>& visit);

/// As for_each_av312 but restricted to permutations whose first entry is
/// `first`. Concatenating first = 1..n reproduces the full order.
void for_each_av312_with_first(int n, int first,
                               const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> enumerate_av312(int n);

}  // namespace vhc
