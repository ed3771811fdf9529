#include "vhc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "vhc/error.hpp"

namespace vhc {

namespace {

bool is_permutation_of_range(const std::vector<int>& entries) {
  std::vector<bool> seen(entries.size() + 1, false);
  for (int v : entries) {
    if (v < 1 || v > static_cast<int>(entries.size()) || seen[static_cast<std::size_t>(v)]) {
      return false;
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!is_permutation_of_range(entries_)) {
    throw InvalidInput("not a permutation of [" + std::to_string(entries_.size()) + "]");
  }
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries)) {}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  bool has_separator = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      has_separator = true;
    } else if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInput("unexpected character '" + std::string(1, c) + "' in permutation");
    }
  }
  if (!has_separator) {
    // Compact digit form.
    if (text.size() > 9) {
      throw InvalidInput("compact permutation form is limited to n <= 9");
    }
    for (char c : text) {
      values.push_back(c - '0');
    }
    return Permutation(std::move(values));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i == text.size()) {
      break;
    }
    int value = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) {
      throw InvalidInput("bad integer in permutation");
    }
    values.push_back(value);
    i = static_cast<std::size_t>(end - text.data());
  }
  return Permutation(std::move(values));
}

int Permutation::position_of(int value) const {
  auto it = std::find(entries_.begin(), entries_.end(), value);
  if (it == entries_.end()) {
    throw InvalidInput("value " + std::to_string(value) + " not in permutation");
  }
  return static_cast<int>(it - entries_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    inv[static_cast<std::size_t>(entries_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ' ';
    out << entries_[i];
  }
  return out.str();
}

Permutation normalize(std::span<const int> seq) {
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return seq[static_cast<std::size_t>(a)] < seq[static_cast<std::size_t>(b)];
  });
  std::vector<int> out(seq.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && seq[static_cast<std::size_t>(order[rank])] ==
                        seq[static_cast<std::size_t>(order[rank - 1])]) {
      throw InvalidInput("normalize: duplicate entry " +
                         std::to_string(seq[static_cast<std::size_t>(order[rank])]));
    }
    out[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out));
}

bool contains_pattern(const Permutation& pi, const Permutation& sigma) {
  const int n = pi.size();
  const int k = sigma.size();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> chosen;  // positions in pi
  chosen.reserve(static_cast<std::size_t>(k));
  // Place sigma's j-th entry at some position after the previous one, keeping
  // the relative order with every earlier choice consistent.
  std::function<bool(int)> place = [&](int from) -> bool {
    const std::size_t j = chosen.size();
    if (static_cast<int>(j) == k) return true;
    const int remaining = k - static_cast<int>(j);
    for (int p = from; p <= n - remaining + 1; ++p) {
      bool ok = true;
      for (std::size_t q = 0; q < j && ok; ++q) {
        const bool pi_less = pi.at(chosen[q]) < pi.at(p);
        const bool sigma_less = sigma.at(static_cast<int>(q) + 1) < sigma.at(static_cast<int>(j) + 1);
        ok = pi_less == sigma_less;
      }
      if (!ok) continue;
      chosen.push_back(p);
      if (place(p + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return place(1);
}

bool avoids_312(const Permutation& pi) {
  // 312^{-1} = 231, and a permutation avoids 231 iff a single stack sorts it.
  const Permutation inv = pi.inverse();
  std::vector<int> stack;
  int next_out = 1;
  for (int x : inv.entries()) {
    while (!stack.empty() && stack.back() < x) {
      if (stack.back() != next_out) return false;
      stack.pop_back();
      ++next_out;
    }
    stack.push_back(x);
  }
  while (!stack.empty()) {
    if (stack.back() != next_out) return false;
    stack.pop_back();
    ++next_out;
  }
  return true;
}

std::vector<int> DescentTable::bottom_heights_from(std::size_t i) const {
  std::vector<int> out;
  for (std::size_t j = i - 1; j < bottom_heights.size(); ++j) {
    out.push_back(bottom_heights[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DescentTable::is_top(int position) const {
  return std::any_of(descents.begin(), descents.end(),
                     [&](const Descent& d) { return d.top_index == position; });
}

bool DescentTable::is_bottom(int position) const {
  return std::any_of(descents.begin(), descents.end(),
                     [&](const Descent& d) { return d.bottom_index == position; });
}

DescentTable descent_table(const Permutation& pi) {
  DescentTable table;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi.at(i) > pi.at(i + 1)) {
      table.descents.push_back({i, i + 1});
      table.top_heights.push_back(pi.at(i));
      table.bottom_heights.push_back(pi.at(i + 1));
    }
  }
  table.bottom_height_set = table.bottom_heights;
  std::sort(table.bottom_height_set.begin(), table.bottom_height_set.end());
  return table;
}

std::vector<int> left_to_right_maxima(const Permutation& pi) {
  std::vector<int> out;
  int best = 0;
  for (int i = 1; i <= pi.size(); ++i) {
    if (pi.at(i) > best) {
      out.push_back(i);
      best = pi.at(i);
    }
  }
  return out;
}

namespace {

class Av312Walker {
 public:
  Av312Walker(int n, const std::function<void(const Permutation&)>& visit)
      : n_(n), visit_(visit), used_(static_cast<std::size_t>(n) + 1, false) {
    prefix_.reserve(static_cast<std::size_t>(n));
  }

  void run_from(int first) {
    if (n_ == 0) {
      visit_(Permutation());
      return;
    }
    push(first);
    extend();
    pop();
  }

  void run() {
    if (n_ == 0) {
      visit_(Permutation());
      return;
    }
    for (int v = 1; v <= n_; ++v) run_from(v);
  }

 private:
  // Appending v completes a 312 iff some earlier entry exceeds v while a
  // later (still earlier than v) entry is below v.
  bool can_append(int v) const {
    int suffix_min = n_ + 1;
    for (std::size_t i = prefix_.size(); i-- > 0;) {
      if (prefix_[i] > v && suffix_min < v) return false;
      suffix_min = std::min(suffix_min, prefix_[i]);
    }
    return true;
  }

  void push(int v) {
    prefix_.push_back(v);
    used_[static_cast<std::size_t>(v)] = true;
  }
  void pop() {
    used_[static_cast<std::size_t>(prefix_.back())] = false;
    prefix_.pop_back();
  }

  void extend() {
    if (static_cast<int>(prefix_.size()) == n_) {
      visit_(Permutation(prefix_));
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] || !can_append(v)) continue;
      push(v);
      extend();
      pop();
    }
  }

  int n_;
  const std::function<void(const Permutation&)>& visit_;
  std::vector<bool> used_;
  std::vector<int> prefix_;
};

}  // namespace

void for_each_av312(int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 0) throw InvalidInput("negative permutation size");
  Av312Walker(n, visit).run();
}

void for_each_av312_with_first(int n, int first,
                               const std::function<void(const Permutation&)>& visit) {
  if (n < 0) throw InvalidInput("negative permutation size");
  if (n == 0) {
    Av312Walker(0, visit).run();
    return;
  }
  if (first < 1 || first > n) throw InvalidInput("first entry out of range");
  Av312Walker(n, visit).run_from(first);
}

std::vector<Permutation> enumerate_av312(int n) {
  std::vector<Permutation> out;
  for_each_av312(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace vhc
