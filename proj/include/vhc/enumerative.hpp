#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vhc {

/// Exact 128-bit integer; arithmetic overflow throws std::overflow_error.
using Integer = boost::multiprecision::checked_int128_t;

std::string to_string(const Integer& v);

Integer binomial(int n, int k);
Integer catalan(int k);
/// 2 (3k)! / (k! (k+1)! (k+2)!), the number of 3D-Dyck words of length 3k.
Integer catalan3d(int k);

/// Polynomial with exact integer coefficients in ascending degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  const std::vector<Integer>& coefficients() const { return coefficients_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Integer coefficient(int i) const;

  Integer operator()(const Integer& x) const;
  /// p(x + c).
  IntPolynomial shifted(const Integer& c) const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Integer> coefficients_;  // no trailing zeros
};

/// Row k (1-based) holds k entries indexed i = 0 .. k-1.
class CountTriangle {
 public:
  CountTriangle() = default;
  explicit CountTriangle(std::vector<std::vector<Integer>> rows);

  int kmax() const { return static_cast<int>(rows_.size()); }
  const std::vector<Integer>& row(int k) const { return rows_[static_cast<std::size_t>(k - 1)]; }
  const Integer& at(int k, int i) const { return row(k)[static_cast<std::size_t>(i)]; }
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }

  /// Every row reversed (i = k-1 first).
  CountTriangle reversed() const;
  CountTriangle truncated(int kmax) const;

  friend bool operator==(const CountTriangle&, const CountTriangle&) = default;

 private:
  std::vector<std::vector<Integer>> rows_;
};

/// Default bound on k for enumerations over Dyck^3_k.
inline constexpr int kDefaultEnumerationBound = 7;
/// Default bound on rounds for the tennis-ball simulation.
inline constexpr int kDefaultTennisBound = 12;

/// Duck_{k,i}: 3D-Dyck words of length 3k with exactly i Y's not preceded by X.
/// Enumerates Dyck^3_k. Throws ResourceLimit when kmax > limit.
CountTriangle duck_triangle(int kmax, int limit = kDefaultEnumerationBound);

enum class UnderlineMethod { Transform, Enumerate, BruteVhc };

const char* to_string(UnderlineMethod m);

/// Binomial transform: out(k, i) = sum_{j >= i} binom(j, i) in(k, j).
CountTriangle binomial_transform(const CountTriangle& duck);

/// underlined-Duck_{k,i} = |RedVHC_k(Av_{3k-i}(312))|.
///  Transform: binomial transform of duck_triangle (kmax <= limit).
///  Enumerate: direct count of (k, i)-underlined duck words (kmax <= limit).
///  BruteVhc:  exhaustive reduced-VHC census (3 kmax <= limit).
CountTriangle underlined_triangle(int kmax, UnderlineMethod method, int limit = kDefaultEnumerationBound);

/// f_k(x) = sum_i |RedVHC_k(Av_{3k-i}(312))| x^i, and h_k(x) = f_k(x - 1).
IntPolynomial f_poly(int k, int limit = kDefaultEnumerationBound);
IntPolynomial h_poly(int k, int limit = kDefaultEnumerationBound);
IntPolynomial f_poly_from(const CountTriangle& underlined, int k);

enum class TennisMethod { Simulate, ClosedForm };

/// Sum of ball labels over all reachable lawns after n rounds.
Integer tennis_ball_weighted(int n, TennisMethod method, int limit = kDefaultTennisBound);

/// Sum over Dyck_k of sum_{i=1}^{k-1} (number of letters before the (i+1)-th U).
Integer duck_k1_oracle(int k, int limit = 12);

struct IdentityCheck {
  int k = 0;
  std::string label;  // which two quantities are compared, when not obvious
  Integer lhs;
  Integer rhs;
  /// lhs == rhs for equalities; lhs > rhs for the positivity check.
  bool holds = false;
  bool passed() const { return holds; }
};

struct IdentityResult {
  int id = 0;  // 1..8 for the core identities, 9+ for derived checks
  std::string name;
  std::string statement;
  std::string method;
  std::vector<IdentityCheck> checks;
  bool passed() const;
};

struct IdentityReport {
  int kmax = 0;
  std::vector<IdentityResult> identities;
  std::vector<std::string> notes;
  bool passed() const;
};

/// Checks, for every k <= kmax:
///   1. sum_i Duck_{k,i} = 3D Catalan(k)
///   2. Duck_{k,0} = C_k
///   3. Duck_{k,k-1} = C_k C_{k+2} - C_{k+1}^2
///   4. underlined-Duck_{k,i} (enumerated) = sum_{j>=i} binom(j,i) Duck_{k,j}
///   5. sum_i underlined-Duck_{k,i} = sum_j 2^j Duck_{k,j}
///   6. sum_i (-1)^i underlined-Duck_{k,i} = f_k(-1) = C_k
///   7. f_k(0) = 3D Catalan(k)
///   8. Duck_{k,1} = tb_{k-1} (simulated and closed form) = duck_k1_oracle(k)
/// plus h_k = sum_i Duck_{k,i} x^i and positivity of the h_k coefficients.
IdentityReport verify_identities(int kmax, int limit = kDefaultEnumerationBound);

}  // namespace vhc
