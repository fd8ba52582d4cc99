#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "modkperm/bigcount.hpp"

namespace modkperm {

using Rational = mpq_class;

/// Thrown when a coefficient at or beyond the truncation order is requested.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Largest exponent denominator a series may carry before operations throw
/// std::overflow_error. Defaults to 24.
long denominator_cap();
void set_denominator_cap(long cap);

/// A truncated Laurent series in x^(1/d) with rational coefficients:
///
///   sum_{q in (1/d)Z, q < N} c_q x^q
///
/// Coefficients at exponents >= N are unknown; a series without N is exact
/// (a Laurent polynomial). The denominator d is kept minimal.
class PuiseuxSeries {
 public:
  /// The exact zero series.
  PuiseuxSeries() = default;

  static PuiseuxSeries zero(const Rational& order);
  static PuiseuxSeries constant(const Rational& c);
  /// c * x^q, exact.
  static PuiseuxSeries monomial(const Rational& c, const Rational& exponent);
  /// sum_i coeffs[i] x^i, truncated at x^order.
  static PuiseuxSeries from_coefficients(const std::vector<Rational>& coeffs, long order);
  static PuiseuxSeries from_counts(const std::vector<BigCount>& coeffs, long order);

  long denominator() const noexcept { return den_; }
  bool is_exact() const noexcept { return !order_.has_value(); }
  /// Truncation order N; nullopt for exact series.
  std::optional<Rational> order() const;
  /// Lowest exponent with a nonzero coefficient; the order when none is
  /// known. nullopt for the exact zero series.
  std::optional<Rational> valuation() const;

  /// (exponent, coefficient) pairs with nonzero coefficients, increasing.
  std::vector<std::pair<Rational, Rational>> terms() const;

  /// Coefficient of x^q. Throws TruncationError when q >= order.
  Rational coefficient(const Rational& q) const;

  /// Drops every term at or beyond `order` and lowers the order to it.
  PuiseuxSeries truncated(const Rational& order) const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& f, const PuiseuxSeries& g);
  friend PuiseuxSeries operator-(const PuiseuxSeries& f, const PuiseuxSeries& g);
  friend PuiseuxSeries operator*(const PuiseuxSeries& f, const PuiseuxSeries& g);
  friend PuiseuxSeries operator*(const Rational& c, const PuiseuxSeries& f);

  /// Same order, denominator and coefficients.
  friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

  /// "c0 + c1*x^(p/q) + ... + O(x^N)", exponents increasing.
  std::string render(std::string_view var = "x") const;

 private:
  friend PuiseuxSeries derivative(const PuiseuxSeries& f);
  friend PuiseuxSeries substitute_monomial(const PuiseuxSeries& f, const Rational& q);
  friend PuiseuxSeries pow_rational(const PuiseuxSeries& f, const Rational& r);

  void normalize();
  /// Lowest key with a nonzero coefficient, or the order when none is known.
  long lowest_key() const;
  /// The same series over the grid (1/den)Z; den must be a multiple of den_.
  PuiseuxSeries rescaled_to(long den) const;
  friend bool agree(const PuiseuxSeries& f, const PuiseuxSeries& g);

  // Exponent q is stored as the integer q * den_.
  long den_ = 1;
  std::optional<long> order_;
  std::map<long, Rational> terms_;
};

/// True when f and g agree on every exponent below both truncation orders.
bool agree(const PuiseuxSeries& f, const PuiseuxSeries& g);

/// f^e. Negative e needs a known, invertible leading term.
PuiseuxSeries pow_int(const PuiseuxSeries& f, long e);

/// f^r via the generalized binomial series of c x^q (1 + u). The leading
/// coefficient c must have a rational r-th power. An exact f needs r to be a
/// nonnegative integer; truncate it first otherwise.
PuiseuxSeries pow_rational(const PuiseuxSeries& f, const Rational& r);

/// Termwise derivative; the order drops by one.
PuiseuxSeries derivative(const PuiseuxSeries& f);

/// f(x^q) for rational q > 0.
PuiseuxSeries substitute_monomial(const PuiseuxSeries& f, const Rational& q);

/// Generalized binomial coefficient binom(r, n) for rational r.
Rational generalized_binomial(const Rational& r, unsigned long n);

/// The solution of F = 1 + z F^p with F(0) = 1, truncated at z^order, by
/// fixed-point iteration.
PuiseuxSeries solve_fuss_series(unsigned p, long order);

/// A_k(t) = sum_m a_k(km) t^m and B_{k,j}(t) = sum_m a_k(km+j) t^m, both
/// truncated at t^order. Requires 0 <= j <= k.
std::pair<PuiseuxSeries, PuiseuxSeries> build_A_B(unsigned k, unsigned j, long order);

/// B_{k,j} = A_k^(j+1) and A_k = 1 + t A_k^(k+1), both to t^order.
bool check_functional_equations(unsigned k, unsigned j, long order);

/// phi(x) = (1 + x^((k+1)/(j+1)))^(j+1), exact.
PuiseuxSeries lagrange_phi(unsigned k, unsigned j);

struct LagrangeReport {
  bool passed = true;
  /// Number of exponents r compared.
  int checked = 0;
  /// First r where the two sides differ.
  std::optional<Rational> first_failure;
};

/// With F(s) = s B_{k,j}(s^((k+1)/(j+1))), compares F|_{s^r} against
/// (1/r) phi(x)^r |_{x^(r-1)} for every r in (1/(j+1))Z with 0 < r < order.
/// Requires 0 <= j < k.
LagrangeReport lagrange_check(unsigned k, unsigned j, long order);
/// Same comparison with a caller-supplied B_{k,j}(t).
LagrangeReport lagrange_check(unsigned k, unsigned j, long order, const PuiseuxSeries& b);

std::string to_string(const Rational& q);

}  // namespace modkperm
