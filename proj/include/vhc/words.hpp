#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace vhc {

/// A word over {U, D} with equal letter counts and #U >= #D on every prefix.
class DyckWord {
 public:
  DyckWord() = default;
  /// Throws InvalidInput if `letters` is not a Dyck word.
  explicit DyckWord(std::string letters);

  static bool is_dyck(std::string_view letters);

  const std::string& letters() const { return letters_; }
  int semilength() const { return static_cast<int>(letters_.size() / 2); }
  std::size_t size() const { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  /// Pairs (i, j) of matched U/D positions (1-based), ordered by i.
  std::vector<std::pair<int, int>> matching() const;

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  std::string letters_;
};

void for_each_dyck(int k, const std::function<void(const DyckWord&)>& visit);
std::vector<DyckWord> enumerate_dyck(int k);

/// A 3D-Dyck word: equal counts of X, Y, Z with #X >= #Y >= #Z on every prefix.
class Word3D {
 public:
  Word3D() = default;
  /// Throws InvalidInput if `letters` is not a 3D-Dyck word.
  explicit Word3D(std::string letters);

  static bool is_3d_dyck(std::string_view letters);

  const std::string& letters() const { return letters_; }
  int k() const { return static_cast<int>(letters_.size() / 3); }
  std::size_t size() const { return letters_.size(); }
  /// 1-based letter access.
  char at(int position) const { return letters_[static_cast<std::size_t>(position - 1)]; }

  friend bool operator==(const Word3D&, const Word3D&) = default;
  friend auto operator<=>(const Word3D&, const Word3D&) = default;

 private:
  struct Unchecked {};
  Word3D(std::string letters, Unchecked) : letters_(std::move(letters)) {}
  friend void for_each_3d_dyck(int, const std::function<void(const Word3D&)>&);

  std::string letters_;
};

/// Visits Dyck^3_k in lexicographic order with X < Y < Z.
void for_each_3d_dyck(int k, const std::function<void(const Word3D&)>& visit);
std::vector<Word3D> enumerate_3d_dyck(int k);

/// Number of Y's whose preceding letter is not X.
int duck_index(const Word3D& w);
/// 1-based positions of the Y's counted by duck_index, ascending.
std::vector<int> non_x_preceded_ys(const Word3D& w);

/// Delete X's, then Y -> U and Z -> D.
DyckWord yz_projection(const Word3D& w);

/// A 3D-Dyck word with some Y positions (1-based, ascending) underlined.
/// Text form writes an underlined Y as 'y': "XYXXZyYZXZyZ".
struct UnderlinedDuckWord {
  Word3D word;
  std::vector<int> underlines;

  int k() const { return word.k(); }
  int i() const { return static_cast<int>(underlines.size()); }

  static UnderlinedDuckWord parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const UnderlinedDuckWord&, const UnderlinedDuckWord&) = default;
  friend auto operator<=>(const UnderlinedDuckWord&, const UnderlinedDuckWord&) = default;
};

/// Underlines are strictly ascending positions of Y's, none preceded by X.
bool validate_underlined(const UnderlinedDuckWord& u);

/// The word with every non-X-preceded Y underlined.
UnderlinedDuckWord canonical_underlining(const Word3D& w);

/// Visits all (k, i)-underlined duck words: words in lexicographic order, and
/// for each word the i-subsets of eligible Y's in lexicographic order.
/// Throws InvalidInput unless 0 <= i <= k - 1 (i = 0 is allowed for k = 0).
void for_each_underlined(int k, int i, const std::function<void(const UnderlinedDuckWord&)>& visit);
std::vector<UnderlinedDuckWord> enumerate_underlined(int k, int i);

/// Rewritten duck word: a Dyck word whose letters carry circle counts and
/// whose U's may be underlined. Text form: 'U' / 'D', underlined U as 'u',
/// each circle as a pair of parentheses around the letter ("UUD(U)DuD",
/// "((U))" for two circles).
struct RewrittenDuckWord {
  std::string letters;
  std::vector<int> circles;
  std::vector<bool> underlined;

  static RewrittenDuckWord parse(std::string_view text);
  std::string to_string() const;

  int circle_total() const;
  int underline_total() const;

  friend bool operator==(const RewrittenDuckWord&, const RewrittenDuckWord&) = default;
};

/// Letters form a Dyck word, only U's are underlined, underlined letters carry
/// no circle, circle total equals underline total, and every prefix has at
/// least as many circles as underlines.
bool validate_rewritten(const RewrittenDuckWord& r);

/// Rewrites a duck word given in canonical underlined form (every Y not
/// preceded by X underlined): each non-underlined Y absorbs its preceding X,
/// each remaining X becomes a circle on the next non-X letter, Y -> U, Z -> D.
/// Throws InvalidInput for anything else.
RewrittenDuckWord rewrite(const UnderlinedDuckWord& u);
inline RewrittenDuckWord rewrite(const Word3D& w) { return rewrite(canonical_underlining(w)); }

/// Inverse of rewrite: each letter's circles become X's placed before it, a
/// non-underlined U becomes XY, an underlined U becomes an underlined Y, D
/// becomes Z. Throws InvalidInput if validate_rewritten fails.
UnderlinedDuckWord decode(const RewrittenDuckWord& r);

/// Visits every rewritten (k, i)-duck word by direct construction over
/// Dyck_k, without going through rewrite.
void for_each_rewritten(int k, int i, const std::function<void(const RewrittenDuckWord&)>& visit);

}  // namespace vhc
