#include "vhc/words.hpp"

#include <algorithm>

#include "vhc/error.hpp"

namespace vhc {

// ---------------------------------------------------------------- Dyck words

DyckWord::DyckWord(std::string letters) : letters_(std::move(letters)) {
  if (!is_dyck(letters_)) {
    throw InvalidInput("not a Dyck word: \"" + letters_ + "\"");
  }
}

bool DyckWord::is_dyck(std::string_view letters) {
  int height = 0;
  for (char c : letters) {
    if (c == 'U') {
      ++height;
    } else if (c == 'D') {
      if (--height < 0) return false;
    } else {
      return false;
    }
  }
  return height == 0;
}

std::vector<std::pair<int, int>> DyckWord::matching() const {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> open;
  for (std::size_t p = 0; p < letters_.size(); ++p) {
    if (letters_[p] == 'U') {
      open.push_back(static_cast<int>(p) + 1);
    } else {
      pairs.emplace_back(open.back(), static_cast<int>(p) + 1);
      open.pop_back();
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

namespace {

void dyck_walk(int k, int ups, int downs, std::string& buf,
               const std::function<void(const DyckWord&)>& visit) {
  if (ups == k && downs == k) {
    visit(DyckWord(buf));
    return;
  }
  if (ups < k) {
    buf.push_back('U');
    dyck_walk(k, ups + 1, downs, buf, visit);
    buf.pop_back();
  }
  if (downs < ups) {
    buf.push_back('D');
    dyck_walk(k, ups, downs + 1, buf, visit);
    buf.pop_back();
  }
}

}  // namespace

void for_each_dyck(int k, const std::function<void(const DyckWord&)>& visit) {
  if (k < 0) throw InvalidInput("negative semilength");
  std::string buf;
  dyck_walk(k, 0, 0, buf, visit);
}

std::vector<DyckWord> enumerate_dyck(int k) {
  std::vector<DyckWord> out;
  for_each_dyck(k, [&](const DyckWord& w) { out.push_back(w); });
  return out;
}

// ------------------------------------------------------------ 3D-Dyck words

Word3D::Word3D(std::string letters) : letters_(std::move(letters)) {
  if (!is_3d_dyck(letters_)) {
    throw InvalidInput("not a 3D-Dyck word: \"" + letters_ + "\"");
  }
}

bool Word3D::is_3d_dyck(std::string_view letters) {
  int x = 0, y = 0, z = 0;
  for (char c : letters) {
    switch (c) {
      case 'X': ++x; break;
      case 'Y': ++y; break;
      case 'Z': ++z; break;
      default: return false;
    }
    if (y > x || z > y) return false;
  }
  return x == y && y == z;
}

namespace {

struct Dyck3Walker {
  int k;
  std::string buf;

  template <typename Emit>
  void walk(int x, int y, int z, Emit&& emit) {
    if (z == k) {
      emit(buf);
      return;
    }
    if (x < k) {
      buf.push_back('X');
      walk(x + 1, y, z, emit);
      buf.pop_back();
    }
    if (y < x) {
      buf.push_back('Y');
      walk(x, y + 1, z, emit);
      buf.pop_back();
    }
    if (z < y) {
      buf.push_back('Z');
      walk(x, y, z + 1, emit);
      buf.pop_back();
    }
  }
};

}  // namespace

void for_each_3d_dyck(int k, const std::function<void(const Word3D&)>& visit) {
  if (k < 0) throw InvalidInput("negative k");
  Dyck3Walker walker{k, {}};
  walker.buf.reserve(static_cast<std::size_t>(3 * k));
  walker.walk(0, 0, 0, [&](const std::string& s) { visit(Word3D(s, Word3D::Unchecked{})); });
}

std::vector<Word3D> enumerate_3d_dyck(int k) {
  std::vector<Word3D> out;
  for_each_3d_dyck(k, [&](const Word3D& w) { out.push_back(w); });
  return out;
}

std::vector<int> non_x_preceded_ys(const Word3D& w) {
  std::vector<int> out;
  const std::string& s = w.letters();
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (s[p] == 'Y' && (p == 0 || s[p - 1] != 'X')) {
      out.push_back(static_cast<int>(p) + 1);
    }
  }
  return out;
}

int duck_index(const Word3D& w) {
  const std::string& s = w.letters();
  int count = 0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (s[p] == 'Y' && (p == 0 || s[p - 1] != 'X')) ++count;
  }
  return count;
}

DyckWord yz_projection(const Word3D& w) {
  std::string out;
  out.reserve(2 * static_cast<std::size_t>(w.k()));
  for (char c : w.letters()) {
    if (c == 'Y') out.push_back('U');
    if (c == 'Z') out.push_back('D');
  }
  return DyckWord(std::move(out));
}

// --------------------------------------------------- underlined duck words

UnderlinedDuckWord UnderlinedDuckWord::parse(std::string_view text) {
  std::string letters(text);
  std::vector<int> underlines;
  for (std::size_t p = 0; p < letters.size(); ++p) {
    if (letters[p] == 'y') {
      letters[p] = 'Y';
      underlines.push_back(static_cast<int>(p) + 1);
    }
  }
  return {Word3D(std::move(letters)), std::move(underlines)};
}

std::string UnderlinedDuckWord::to_string() const {
  std::string s = word.letters();
  for (int p : underlines) {
    if (p >= 1 && p <= static_cast<int>(s.size())) s[static_cast<std::size_t>(p - 1)] = 'y';
  }
  return s;
}

bool validate_underlined(const UnderlinedDuckWord& u) {
  if (!Word3D::is_3d_dyck(u.word.letters())) return false;
  int previous = 0;
  for (int p : u.underlines) {
    if (p <= previous || p > static_cast<int>(u.word.size())) return false;
    if (u.word.at(p) != 'Y') return false;
    if (p == 1 || u.word.at(p - 1) == 'X') return false;
    previous = p;
  }
  return true;
}

UnderlinedDuckWord canonical_underlining(const Word3D& w) {
  return {w, non_x_preceded_ys(w)};
}

void for_each_underlined(int k, int i,
                         const std::function<void(const UnderlinedDuckWord&)>& visit) {
  if (k < 0 || i < 0 || (k > 0 && i > k - 1) || (k == 0 && i != 0)) {
    throw InvalidInput("underline count " + std::to_string(i) + " out of range for k = " +
                       std::to_string(k));
  }
  UnderlinedDuckWord u;
  std::vector<std::size_t> pick(static_cast<std::size_t>(i));
  for_each_3d_dyck(k, [&](const Word3D& w) {
    const std::vector<int> eligible = non_x_preceded_ys(w);
    const std::size_t m = eligible.size();
    const std::size_t r = static_cast<std::size_t>(i);
    if (r > m) return;
    u.word = w;
    u.underlines.assign(r, 0);
    for (std::size_t j = 0; j < r; ++j) pick[j] = j;
    while (true) {
      for (std::size_t j = 0; j < r; ++j) u.underlines[j] = eligible[pick[j]];
      visit(u);
      // Next r-subset of [0, m) in lexicographic order.
      std::size_t j = r;
      while (j > 0 && pick[j - 1] == m - r + (j - 1)) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t q = j; q < r; ++q) pick[q] = pick[q - 1] + 1;
    }
  });
}

std::vector<UnderlinedDuckWord> enumerate_underlined(int k, int i) {
  std::vector<UnderlinedDuckWord> out;
  for_each_underlined(k, i, [&](const UnderlinedDuckWord& u) { out.push_back(u); });
  return out;
}

// ------------------------------------------------------ rewritten duck words

RewrittenDuckWord RewrittenDuckWord::parse(std::string_view text) {
  RewrittenDuckWord r;
  std::size_t p = 0;
  while (p < text.size()) {
    int open = 0;
    while (p < text.size() && text[p] == '(') {
      ++open;
      ++p;
    }
    if (p == text.size()) throw InvalidInput("rewritten word: dangling '('");
    const char c = text[p++];
    if (c != 'U' && c != 'D' && c != 'u') {
      throw InvalidInput("rewritten word: unexpected character '" + std::string(1, c) + "'");
    }
    for (int j = 0; j < open; ++j) {
      if (p == text.size() || text[p] != ')') throw InvalidInput("rewritten word: unbalanced circle");
      ++p;
    }
    r.letters.push_back(c == 'u' ? 'U' : c);
    r.circles.push_back(open);
    r.underlined.push_back(c == 'u');
  }
  return r;
}

std::string RewrittenDuckWord::to_string() const {
  std::string s;
  for (std::size_t p = 0; p < letters.size(); ++p) {
    const int c = p < circles.size() ? circles[p] : 0;
    s.append(static_cast<std::size_t>(c), '(');
    s.push_back(p < underlined.size() && underlined[p] ? 'u' : letters[p]);
    s.append(static_cast<std::size_t>(c), ')');
  }
  return s;
}

int RewrittenDuckWord::circle_total() const {
  int total = 0;
  for (int c : circles) total += c;
  return total;
}

int RewrittenDuckWord::underline_total() const {
  return static_cast<int>(std::count(underlined.begin(), underlined.end(), true));
}

bool validate_rewritten(const RewrittenDuckWord& r) {
  if (r.circles.size() != r.letters.size() || r.underlined.size() != r.letters.size()) return false;
  if (!DyckWord::is_dyck(r.letters)) return false;
  int circles = 0;
  int underlines = 0;
  for (std::size_t p = 0; p < r.letters.size(); ++p) {
    if (r.circles[p] < 0) return false;
    if (r.underlined[p]) {
      if (r.letters[p] != 'U' || r.circles[p] != 0) return false;
      ++underlines;
    }
    circles += r.circles[p];
    if (circles < underlines) return false;
  }
  return circles == underlines;
}

RewrittenDuckWord rewrite(const UnderlinedDuckWord& u) {
  if (!validate_underlined(u)) {
    throw InvalidInput("rewrite: not an underlined duck word: " + u.to_string());
  }
  if (u.underlines != non_x_preceded_ys(u.word)) {
    throw InvalidInput("rewrite: every Y not preceded by X must be underlined: " + u.to_string());
  }
  const std::string& s = u.word.letters();
  std::vector<bool> is_underlined(s.size() + 1, false);
  for (int p : u.underlines) is_underlined[static_cast<std::size_t>(p)] = true;

  RewrittenDuckWord r;
  int pending = 0;
  for (std::size_t q = 0; q < s.size(); ++q) {
    const int position = static_cast<int>(q) + 1;
    switch (s[q]) {
      case 'X':
        // Absorbed by the non-underlined Y right after it, otherwise a circle.
        if (!(q + 1 < s.size() && s[q + 1] == 'Y' && !is_underlined[static_cast<std::size_t>(position + 1)])) {
          ++pending;
        }
        break;
      case 'Y':
        r.letters.push_back('U');
        r.underlined.push_back(is_underlined[static_cast<std::size_t>(position)]);
        r.circles.push_back(pending);
        pending = 0;
        break;
      default:
        r.letters.push_back('D');
        r.underlined.push_back(false);
        r.circles.push_back(pending);
        pending = 0;
        break;
    }
  }
  return r;
}

UnderlinedDuckWord decode(const RewrittenDuckWord& r) {
  if (!validate_rewritten(r)) {
    throw InvalidInput("decode: malformed rewritten duck word: " + r.to_string());
  }
  std::string letters;
  std::vector<int> underlines;
  for (std::size_t p = 0; p < r.letters.size(); ++p) {
    letters.append(static_cast<std::size_t>(r.circles[p]), 'X');
    if (r.letters[p] == 'D') {
      letters.push_back('Z');
    } else if (r.underlined[p]) {
      letters.push_back('Y');
      underlines.push_back(static_cast<int>(letters.size()));
    } else {
      letters.append("XY");
    }
  }
  if (!Word3D::is_3d_dyck(letters)) {
    throw InvalidInput("decode: does not decode to a 3D-Dyck word: " + r.to_string());
  }
  return {Word3D(std::move(letters)), std::move(underlines)};
}

namespace {

struct RewrittenWalker {
  int k;
  int target;
  const std::function<void(const RewrittenDuckWord&)>& visit;
  RewrittenDuckWord cur;

  void walk(int ups, int downs, int circles, int underlines) {
    if (ups == k && downs == k) {
      if (circles == target && underlines == target) visit(cur);
      return;
    }
    auto place = [&](char letter, bool underline, int c) {
      cur.letters.push_back(letter);
      cur.underlined.push_back(underline);
      cur.circles.push_back(c);
      walk(ups + (letter == 'U'), downs + (letter == 'D'), circles + c, underlines + underline);
      cur.letters.pop_back();
      cur.underlined.pop_back();
      cur.circles.pop_back();
    };
    for (char letter : {'U', 'D'}) {
      if (letter == 'U' && ups == k) continue;
      if (letter == 'D' && downs == ups) continue;
      for (int c = 0; circles + c <= target; ++c) place(letter, false, c);
      if (letter == 'U' && underlines < target && circles >= underlines + 1) place('U', true, 0);
    }
  }
};

}  // namespace

void for_each_rewritten(int k, int i, const std::function<void(const RewrittenDuckWord&)>& visit) {
  if (k < 0 || i < 0) throw InvalidInput("negative k or i");
  RewrittenWalker walker{k, i, visit, {}};
  walker.walk(0, 0, 0, 0);
}

}  // namespace vhc
