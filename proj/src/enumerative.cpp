#include "vhc/enumerative.hpp"

#include <algorithm>
#include <sstream>

#include "vhc/bijections.hpp"
#include "vhc/error.hpp"
#include "vhc/hook_config.hpp"
#include "vhc/words.hpp"

namespace vhc {

std::string to_string(const Integer& v) { return v.str(); }

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (int i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);  // exact: r * (n-i) is divisible by i+1 here
  }
  return r;
}

Integer catalan(int k) {
  if (k < 0) throw InvalidInput("catalan: negative k");
  return binomial(2 * k, k) / (k + 1);
}

Integer catalan3d(int k) {
  if (k < 0) throw InvalidInput("catalan3d: negative k");
  // (3k)! / (k!)^3 = binom(3k, k) binom(2k, k), then divide out (k+1)^2 (k+2) / 2.
  const Integer multinomial = binomial(3 * k, k) * binomial(2 * k, k);
  return 2 * multinomial / (Integer(k + 1) * (k + 1) * (k + 2));
}

// ------------------------------------------------------------ IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Integer IntPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[static_cast<std::size_t>(i)];
}

Integer IntPolynomial::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::shifted(const Integer& c) const {
  // Coefficient of x^j in p(x + c) is sum_{i >= j} a_i binom(i, j) c^(i - j).
  const int n = static_cast<int>(coefficients_.size());
  std::vector<Integer> out(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    Integer power = 1;
    for (int i = j; i < n; ++i) {
      out[static_cast<std::size_t>(j)] += coefficients_[static_cast<std::size_t>(i)] * binomial(i, j) * power;
      if (i + 1 < n) power *= c;
    }
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Integer& a = coefficients_[i];
    if (a == 0) continue;
    if (!first) out << (a < 0 ? " - " : " + ");
    else if (a < 0) out << "-";
    const Integer mag = a < 0 ? Integer(-a) : a;
    if (i == 0 || mag != 1) out << mag.str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

// ------------------------------------------------------------ CountTriangle

CountTriangle::CountTriangle(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k].size() != k + 1) {
      throw InvalidInput("triangle row " + std::to_string(k + 1) + " has " +
                         std::to_string(rows_[k].size()) + " entries");
    }
    for (const Integer& v : rows_[k]) {
      if (v < 0) throw InvalidInput("triangle entries must be nonnegative");
    }
  }
}

CountTriangle CountTriangle::reversed() const {
  auto rows = rows_;
  for (auto& r : rows) std::reverse(r.begin(), r.end());
  return CountTriangle(std::move(rows));
}

CountTriangle CountTriangle::truncated(int kmax) const {
  kmax = std::clamp(kmax, 0, this->kmax());
  return CountTriangle({rows_.begin(), rows_.begin() + kmax});
}

// --------------------------------------------------------------- triangles

namespace {

void require_within(int value, int limit, const char* what) {
  if (value > limit) {
    throw ResourceLimit(std::string(what) + " " + std::to_string(value) + " exceeds limit " +
                        std::to_string(limit));
  }
}

}  // namespace

CountTriangle duck_triangle(int kmax, int limit) {
  if (kmax < 0) throw InvalidInput("duck_triangle: negative kmax");
  require_within(kmax, limit, "duck_triangle: kmax");
  std::vector<std::vector<Integer>> rows;
  for (int k = 1; k <= kmax; ++k) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(k), 0);
    for_each_3d_dyck(k, [&](const Word3D& w) { ++counts[static_cast<std::size_t>(duck_index(w))]; });
    rows.emplace_back(counts.begin(), counts.end());
  }
  return CountTriangle(std::move(rows));
}

const char* to_string(UnderlineMethod m) {
  switch (m) {
    case UnderlineMethod::Transform: return "transform";
    case UnderlineMethod::Enumerate: return "enumerate";
    case UnderlineMethod::BruteVhc: return "brute_vhc";
  }
  return "?";
}

CountTriangle binomial_transform(const CountTriangle& duck) {
  std::vector<std::vector<Integer>> rows;
  for (int k = 1; k <= duck.kmax(); ++k) {
    std::vector<Integer> row(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
      for (int j = i; j < k; ++j) row[static_cast<std::size_t>(i)] += binomial(j, i) * duck.at(k, j);
    }
    rows.push_back(std::move(row));
  }
  return CountTriangle(std::move(rows));
}

CountTriangle underlined_triangle(int kmax, UnderlineMethod method, int limit) {
  if (kmax < 0) throw InvalidInput("underlined_triangle: negative kmax");
  std::vector<std::vector<Integer>> rows;
  switch (method) {
    case UnderlineMethod::Transform:
      return binomial_transform(duck_triangle(kmax, limit));
    case UnderlineMethod::Enumerate:
      require_within(kmax, limit, "underlined_triangle(enumerate): kmax");
      for (int k = 1; k <= kmax; ++k) {
        std::vector<Integer> row;
        for (int i = 0; i < k; ++i) {
          std::uint64_t count = 0;
          for_each_underlined(k, i, [&](const UnderlinedDuckWord&) { ++count; });
          row.emplace_back(count);
        }
        rows.push_back(std::move(row));
      }
      return CountTriangle(std::move(rows));
    case UnderlineMethod::BruteVhc: {
      require_within(3 * kmax, limit, "underlined_triangle(brute_vhc): 3 kmax");
      const auto census = redvhc_census(3 * kmax);
      for (int k = 1; k <= kmax; ++k) {
        std::vector<Integer> row;
        for (int i = 0; i < k; ++i) {
          auto it = census.find({k, 3 * k - i});
          row.emplace_back(it == census.end() ? 0 : it->second);
        }
        rows.push_back(std::move(row));
      }
      return CountTriangle(std::move(rows));
    }
  }
  return CountTriangle();
}

IntPolynomial f_poly_from(const CountTriangle& underlined, int k) {
  if (k < 1 || k > underlined.kmax()) throw InvalidInput("f_poly: k out of range");
  return IntPolynomial(underlined.row(k));
}

IntPolynomial f_poly(int k, int limit) {
  return f_poly_from(underlined_triangle(k, UnderlineMethod::Transform, limit), k);
}

IntPolynomial h_poly(int k, int limit) { return f_poly(k, limit).shifted(-1); }

// -------------------------------------------------------------- tennis balls

Integer tennis_ball_weighted(int n, TennisMethod method, int limit) {
  if (n < 0) throw InvalidInput("tennis_ball_weighted: negative n");
  if (method == TennisMethod::ClosedForm) {
    // (2n^2 + 5n + 4) binom(2n + 1, n) / (n + 2) - 2^(2n + 1)
    const Integer lead = Integer(2 * n * n + 5 * n + 4) * binomial(2 * n + 1, n) / (n + 2);
    return lead - (Integer(1) << (2 * n + 1));
  }
  require_within(n, limit, "tennis_ball_weighted(simulate): n");
  Integer total = 0;
  for (const TennisBallConfig& a : reachable_lawns(n)) {
    for (int ball : a.lawn) total += ball;
  }
  return total;
}

Integer duck_k1_oracle(int k, int limit) {
  if (k < 0) throw InvalidInput("duck_k1_oracle: negative k");
  require_within(k, limit, "duck_k1_oracle: k");
  Integer total = 0;
  for_each_dyck(k, [&](const DyckWord& w) {
    int ups = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] != 'U') continue;
      ++ups;
      if (ups >= 2) total += static_cast<int>(p);  // letters before the ups-th U
    }
  });
  return total;
}

// ---------------------------------------------------------------- identities

bool IdentityResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed(); });
}

bool IdentityReport::passed() const {
  return std::all_of(identities.begin(), identities.end(), [](const IdentityResult& r) { return r.passed(); });
}

namespace {

IdentityCheck equality(int k, std::string label, Integer lhs, Integer rhs) {
  IdentityCheck c{k, std::move(label), std::move(lhs), std::move(rhs), false};
  c.holds = c.lhs == c.rhs;
  return c;
}

}  // namespace

IdentityReport verify_identities(int kmax, int limit) {
  if (kmax < 0) throw InvalidInput("verify_identities: negative kmax");
  require_within(kmax, limit, "verify_identities: kmax");
  const CountTriangle duck = duck_triangle(kmax, limit);
  const CountTriangle transformed = binomial_transform(duck);
  const CountTriangle enumerated = underlined_triangle(kmax, UnderlineMethod::Enumerate, limit);

  IdentityReport report;
  report.kmax = kmax;
  report.identities.reserve(10);  // references below must stay valid
  auto add = [&](int id, std::string name, std::string statement, std::string method) -> IdentityResult& {
    report.identities.push_back({id, std::move(name), std::move(statement), std::move(method), {}});
    return report.identities.back();
  };

  auto& row_sum = add(1, "duck_row_sum", "sum_i Duck(k,i) = catalan3d(k)", "enumerate Dyck3; closed form");
  auto& duck_zero = add(2, "duck_zero_is_catalan", "Duck(k,0) = C(k)", "enumerate Dyck3; closed form");
  auto& duck_last = add(3, "duck_last_column", "Duck(k,k-1) = C(k) C(k+2) - C(k+1)^2",
                        "enumerate Dyck3; closed form");
  auto& transform = add(4, "binomial_transform",
                        "underlined(k,i) = sum_{j>=i} binom(j,i) Duck(k,j)",
                        "enumerate underlined words; transform of enumerated duck counts");
  auto& weighted_sum = add(5, "underlined_row_sum", "sum_i underlined(k,i) = sum_j 2^j Duck(k,j)",
                           "enumerate underlined words; enumerate Dyck3");
  auto& alternating = add(6, "f_at_minus_one", "f_k(-1) = sum_i (-1)^i underlined(k,i) = C(k)",
                          "enumerate underlined words; closed form");
  auto& f_zero = add(7, "f_at_zero", "f_k(0) = catalan3d(k)", "enumerate underlined words; closed form");
  auto& linear = add(8, "duck_linear_is_tennis",
                     "Duck(k,1) = tb(k-1) (simulated, closed form) = duck_k1_oracle(k)",
                     "enumerate Dyck3; tennis-ball simulation; closed form; Dyck_k oracle");
  auto& h_coeffs = add(9, "h_coefficients", "h_k(x) = f_k(x-1) has coefficients Duck(k,i)",
                       "exact Taylor shift of f_k");
  auto& h_positive = add(10, "h_positive", "every coefficient of h_k is > 0", "exact Taylor shift of f_k");

  for (int k = 1; k <= kmax; ++k) {
    const auto& d = duck.row(k);
    Integer duck_sum = 0;
    Integer weighted = 0;
    for (int j = 0; j < k; ++j) {
      duck_sum += d[static_cast<std::size_t>(j)];
      weighted += (Integer(1) << j) * d[static_cast<std::size_t>(j)];
    }
    row_sum.checks.push_back(equality(k, "", duck_sum, catalan3d(k)));
    duck_zero.checks.push_back(equality(k, "", d[0], catalan(k)));
    duck_last.checks.push_back(
        equality(k, "", d.back(), catalan(k) * catalan(k + 2) - catalan(k + 1) * catalan(k + 1)));

    const auto& u = enumerated.row(k);
    Integer underlined_sum = 0;
    Integer signed_sum = 0;
    for (int i = 0; i < k; ++i) {
      transform.checks.push_back(equality(k, "i=" + std::to_string(i), u[static_cast<std::size_t>(i)],
                                          transformed.at(k, i)));
      underlined_sum += u[static_cast<std::size_t>(i)];
      signed_sum += (i % 2 ? -1 : 1) * u[static_cast<std::size_t>(i)];
    }
    weighted_sum.checks.push_back(equality(k, "", underlined_sum, weighted));

    const IntPolynomial f = f_poly_from(enumerated, k);
    alternating.checks.push_back(equality(k, "alternating sum vs C(k)", signed_sum, catalan(k)));
    alternating.checks.push_back(equality(k, "f_k(-1) vs C(k)", f(-1), catalan(k)));
    f_zero.checks.push_back(equality(k, "", f(0), catalan3d(k)));

    if (k >= 2) {
      linear.checks.push_back(equality(k, "Duck(k,1) vs simulated tb(k-1)", d[1],
                                       tennis_ball_weighted(k - 1, TennisMethod::Simulate)));
      linear.checks.push_back(equality(k, "Duck(k,1) vs closed-form tb(k-1)", d[1],
                                       tennis_ball_weighted(k - 1, TennisMethod::ClosedForm)));
      linear.checks.push_back(equality(k, "Duck(k,1) vs Dyck_k oracle", d[1], duck_k1_oracle(k)));
    }

    const IntPolynomial h = f.shifted(-1);
    for (int i = 0; i < k; ++i) {
      h_coeffs.checks.push_back(equality(k, "i=" + std::to_string(i), h.coefficient(i), d[static_cast<std::size_t>(i)]));
      IdentityCheck positive{k, "i=" + std::to_string(i), h.coefficient(i), 0, false};
      positive.holds = positive.lhs > 0;
      h_positive.checks.push_back(positive);
    }
  }
  report.notes.push_back(
      "underlined_row_sum weights Duck(k,j) by 2^j; the exponent follows the summation index j");
  report.notes.push_back("binomial_transform sums binom(j,i) Duck(k,j) over j >= i");
  return report;
}

}  // namespace vhc
