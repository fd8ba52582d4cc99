#include "modkperm/series.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "modkperm/counting.hpp"

namespace modkperm {

namespace {

std::atomic<long> g_denominator_cap{24};

long key_of(const Rational& q, long den) {
  mpz_class scaled = q.get_num() * den;
  if (!mpz_divisible_p(scaled.get_mpz_t(), q.get_den_mpz_t())) {
    throw std::logic_error("exponent " + q.get_str() + " is not on the grid (1/" + std::to_string(den) + ")Z");
  }
  mpz_class key = scaled / q.get_den();
  if (!key.fits_slong_p()) throw std::overflow_error("exponent out of range: " + q.get_str());
  return key.get_si();
}

bool on_grid(const Rational& q, long den) {
  mpz_class scaled = q.get_num() * den;
  return mpz_divisible_p(scaled.get_mpz_t(), q.get_den_mpz_t()) != 0;
}

long den_of(const Rational& q) {
  if (!q.get_den().fits_slong_p()) throw std::overflow_error("exponent denominator out of range");
  return q.get_den().get_si();
}

Rational exponent(long key, long den) {
  Rational q(key, den);
  q.canonicalize();
  return q;
}

// c^r for rational c and r; throws when the result is irrational or undefined.
Rational rational_power(const Rational& c, const Rational& r) {
  if (c == 0) throw std::domain_error("leading coefficient is zero");
  if (!r.get_den().fits_ulong_p() || !r.get_num().fits_slong_p()) {
    throw std::domain_error("exponent too large: " + r.get_str());
  }
  const unsigned long root = r.get_den().get_ui();
  const long num = r.get_num().get_si();

  auto exact_root = [&](const mpz_class& v) {
    mpz_class out;
    if (mpz_root(out.get_mpz_t(), v.get_mpz_t(), root) == 0) {
      throw std::domain_error("leading coefficient " + c.get_str() + " has no rational power " + r.get_str());
    }
    return out;
  };
  if (c < 0 && root % 2 == 0) {
    throw std::domain_error("leading coefficient " + c.get_str() + " has no rational power " + r.get_str());
  }
  Rational base(exact_root(c.get_num()), exact_root(c.get_den()));
  base.canonicalize();
  Rational out = 1;
  const unsigned long mag = static_cast<unsigned long>(num < 0 ? -num : num);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), mag);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), mag);
  out.canonicalize();
  if (num < 0) out = 1 / out;
  return out;
}

}  // namespace

long denominator_cap() { return g_denominator_cap.load(); }

void set_denominator_cap(long cap) {
  if (cap < 1) throw std::invalid_argument("denominator cap must be >= 1");
  g_denominator_cap.store(cap);
}

PuiseuxSeries PuiseuxSeries::zero(const Rational& order) {
  PuiseuxSeries s;
  s.den_ = den_of(order);
  s.order_ = key_of(order, s.den_);
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::constant(const Rational& c) { return monomial(c, 0); }

PuiseuxSeries PuiseuxSeries::monomial(const Rational& c, const Rational& exp) {
  PuiseuxSeries s;
  s.den_ = den_of(exp);
  s.terms_[key_of(exp, s.den_)] = c;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::from_coefficients(const std::vector<Rational>& coeffs, long order) {
  PuiseuxSeries s;
  s.order_ = order;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.terms_[static_cast<long>(i)] = coeffs[i];
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::from_counts(const std::vector<BigCount>& coeffs, long order) {
  std::vector<Rational> q(coeffs.begin(), coeffs.end());
  return from_coefficients(q, order);
}

std::optional<Rational> PuiseuxSeries::order() const {
  if (!order_) return std::nullopt;
  return exponent(*order_, den_);
}

long PuiseuxSeries::lowest_key() const {
  if (!terms_.empty()) return terms_.begin()->first;
  if (order_) return *order_;
  throw std::logic_error("exact zero series has no lowest exponent");
}

std::optional<Rational> PuiseuxSeries::valuation() const {
  if (terms_.empty() && !order_) return std::nullopt;
  return exponent(lowest_key(), den_);
}

std::vector<std::pair<Rational, Rational>> PuiseuxSeries::terms() const {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.emplace_back(exponent(key, den_), c);
  return out;
}

Rational PuiseuxSeries::coefficient(const Rational& q) const {
  if (order_ && q >= exponent(*order_, den_)) {
    throw TruncationError("coefficient of x^" + q.get_str() + " requested, series known below x^" +
                          exponent(*order_, den_).get_str() + " only");
  }
  if (!on_grid(q, den_)) return 0;
  auto it = terms_.find(key_of(q, den_));
  return it == terms_.end() ? Rational(0) : it->second;
}

void PuiseuxSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0 || (order_ && it->first >= *order_)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  long g = den_;
  if (order_) g = std::gcd(g, *order_);
  for (const auto& [key, c] : terms_) g = std::gcd(g, key);
  if (g > 1) {
    den_ /= g;
    if (order_) *order_ /= g;
    std::map<long, Rational> scaled;
    for (auto& [key, c] : terms_) scaled.emplace_hint(scaled.end(), key / g, std::move(c));
    terms_ = std::move(scaled);
  }
  if (den_ > denominator_cap()) {
    throw std::overflow_error("series denominator " + std::to_string(den_) + " exceeds the cap " +
                              std::to_string(denominator_cap()));
  }
}

PuiseuxSeries PuiseuxSeries::rescaled_to(long den) const {
  if (den % den_ != 0) throw std::logic_error("rescaled_to: not a multiple of the denominator");
  const long factor = den / den_;
  PuiseuxSeries s;
  s.den_ = den;
  if (order_) s.order_ = *order_ * factor;
  for (const auto& [key, c] : terms_) s.terms_.emplace_hint(s.terms_.end(), key * factor, c);
  return s;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& order) const {
  const long den = std::lcm(den_, den_of(order));
  PuiseuxSeries s = rescaled_to(den);
  const long cut = key_of(order, den);
  s.order_ = s.order_ ? std::min(*s.order_, cut) : cut;
  s.normalize();
  return s;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries s = *this;
  for (auto& [key, c] : s.terms_) c = -c;
  return s;
}

namespace {

std::optional<long> min_order(const std::optional<long>& a, const std::optional<long>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

PuiseuxSeries operator+(const PuiseuxSeries& f, const PuiseuxSeries& g) {
  const long den = std::lcm(f.den_, g.den_);
  PuiseuxSeries s = f.rescaled_to(den);
  const PuiseuxSeries h = g.rescaled_to(den);
  for (const auto& [key, c] : h.terms_) s.terms_[key] += c;
  s.order_ = min_order(s.order_, h.order_);
  s.normalize();
  return s;
}

PuiseuxSeries operator-(const PuiseuxSeries& f, const PuiseuxSeries& g) { return f + (-g); }

PuiseuxSeries operator*(const PuiseuxSeries& f, const PuiseuxSeries& g) {
  const bool f_zero = f.is_exact() && f.terms_.empty();
  const bool g_zero = g.is_exact() && g.terms_.empty();
  if (f_zero || g_zero) return PuiseuxSeries();

  const long den = std::lcm(f.den_, g.den_);
  const PuiseuxSeries a = f.rescaled_to(den);
  const PuiseuxSeries b = g.rescaled_to(den);
  // Known to min(N_a + val_b, N_b + val_a).
  std::optional<long> order;
  if (a.order_) order = *a.order_ + b.lowest_key();
  if (b.order_) order = min_order(order, *b.order_ + a.lowest_key());

  PuiseuxSeries s;
  s.den_ = den;
  s.order_ = order;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const long key = ka + kb;
      if (order && key >= *order) break;
      s.terms_[key] += ca * cb;
    }
  }
  s.normalize();
  return s;
}

PuiseuxSeries operator*(const Rational& c, const PuiseuxSeries& f) {
  PuiseuxSeries s = f;
  for (auto& [key, v] : s.terms_) v *= c;
  s.normalize();
  return s;
}

bool agree(const PuiseuxSeries& f, const PuiseuxSeries& g) {
  const long den = std::lcm(f.den_, g.den_);
  const PuiseuxSeries a = f.rescaled_to(den);
  const PuiseuxSeries b = g.rescaled_to(den);
  const auto order = min_order(a.order_, b.order_);
  auto below = [&](long key) { return !order || key < *order; };
  for (const auto& [key, c] : a.terms_) {
    if (!below(key)) break;
    auto it = b.terms_.find(key);
    if (it == b.terms_.end() ? c != 0 : it->second != c) return false;
  }
  for (const auto& [key, c] : b.terms_) {
    if (!below(key)) break;
    if (!a.terms_.contains(key) && c != 0) return false;
  }
  return true;
}

PuiseuxSeries pow_int(const PuiseuxSeries& f, long e) {
  if (e < 0) return pow_rational(f, Rational(e));
  PuiseuxSeries result = PuiseuxSeries::constant(1);
  PuiseuxSeries base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational generalized_binomial(const Rational& r, unsigned long n) {
  Rational out = 1;
  for (unsigned long i = 0; i < n; ++i) {
    out *= r - Rational(static_cast<long>(i));
    out /= Rational(static_cast<long>(i + 1));
  }
  return out;
}

PuiseuxSeries pow_rational(const PuiseuxSeries& f, const Rational& r) {
  if (r.get_den() == 1 && r >= 0) {
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("exponent too large");
    return pow_int(f, r.get_num().get_si());
  }
  if (f.terms_.empty()) throw std::domain_error("pow_rational: leading term is unknown");

  const long den = f.den_;
  const long lead = f.terms_.begin()->first;
  const Rational c = f.terms_.begin()->second;
  const Rational scale = rational_power(c, r);
  const Rational shift = exponent(lead, den) * r;

  // f = c x^lead (1 + u)
  PuiseuxSeries u;
  u.den_ = den;
  if (f.order_) u.order_ = *f.order_ - lead;
  for (auto it = std::next(f.terms_.begin()); it != f.terms_.end(); ++it) {
    u.terms_.emplace_hint(u.terms_.end(), it->first - lead, it->second / c);
  }
  u.normalize();

  if (u.terms_.empty() && u.is_exact()) return PuiseuxSeries::monomial(scale, shift);
  if (u.is_exact()) {
    throw std::invalid_argument("pow_rational: exponent " + r.get_str() +
                                " of an exact series is infinite; truncate first");
  }

  const Rational rel_order = *u.order();
  PuiseuxSeries sum = PuiseuxSeries::constant(1).truncated(rel_order);
  if (!u.terms_.empty()) {
    const Rational step = exponent(u.terms_.begin()->first, u.den_);
    PuiseuxSeries power = PuiseuxSeries::constant(1);
    for (unsigned long n = 1; step * static_cast<long>(n) < rel_order; ++n) {
      power = (power * u).truncated(rel_order);
      sum = sum + generalized_binomial(r, n) * power;
    }
  }
  return PuiseuxSeries::monomial(scale, shift) * sum;
}

PuiseuxSeries derivative(const PuiseuxSeries& f) {
  PuiseuxSeries s;
  s.den_ = f.den_;
  if (f.order_) s.order_ = *f.order_ - f.den_;
  for (const auto& [key, c] : f.terms_) {
    if (key == 0) continue;
    s.terms_.emplace_hint(s.terms_.end(), key - f.den_, c * exponent(key, f.den_));
  }
  s.normalize();
  return s;
}

PuiseuxSeries substitute_monomial(const PuiseuxSeries& f, const Rational& q) {
  if (q <= 0) throw std::invalid_argument("substitute_monomial: exponent must be positive, got " + q.get_str());
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) throw std::overflow_error("exponent too large");
  const long a = q.get_num().get_si();
  const long b = q.get_den().get_si();
  PuiseuxSeries s;
  s.den_ = f.den_ * b;
  if (f.order_) s.order_ = *f.order_ * a;
  for (const auto& [key, c] : f.terms_) s.terms_.emplace_hint(s.terms_.end(), key * a, c);
  s.normalize();
  return s;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string power_text(const Rational& e, std::string_view var) {
  std::string v(var);
  if (e == 1) return v;
  if (e.get_den() == 1 && e > 0) return v + "^" + e.get_str();
  return v + "^(" + e.get_str() + ")";
}

}  // namespace

std::string PuiseuxSeries::render(std::string_view var) const {
  std::string out;
  for (const auto& [key, c] : terms_) {
    const Rational e = exponent(key, den_);
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += power_text(e, var);
    } else {
      out += mag.get_str() + "*" + power_text(e, var);
    }
  }
  if (order_) {
    const Rational n = exponent(*order_, den_);
    const std::string big_o = n == 0 ? "O(1)" : "O(" + power_text(n, var) + ")";
    out += out.empty() ? big_o : " + " + big_o;
  }
  return out.empty() ? "0" : out;
}

PuiseuxSeries solve_fuss_series(unsigned p, long order) {
  if (p < 1 || order < 1) throw std::invalid_argument("solve_fuss_series: need p >= 1 and order >= 1");
  const Rational n(order);
  const PuiseuxSeries one = PuiseuxSeries::constant(1);
  const PuiseuxSeries z = PuiseuxSeries::monomial(1, 1);
  PuiseuxSeries f = one.truncated(n);
  // Each pass fixes at least one more coefficient.
  for (long i = 0; i < order; ++i) f = (one + z * pow_int(f, p)).truncated(n);
  return f;
}

std::pair<PuiseuxSeries, PuiseuxSeries> build_A_B(unsigned k, unsigned j, long order) {
  if (k < 1 || j > k || order < 1) throw std::invalid_argument("build_A_B: need k >= 1, 0 <= j <= k, order >= 1");
  std::vector<BigCount> a, b;
  for (long m = 0; m < order; ++m) {
    a.push_back(a_k_closed(static_cast<unsigned>(k * m), k));
    b.push_back(a_k_closed(static_cast<unsigned>(k * m + j), k));
  }
  return {PuiseuxSeries::from_counts(a, order), PuiseuxSeries::from_counts(b, order)};
}

bool check_functional_equations(unsigned k, unsigned j, long order) {
  const auto [a, b] = build_A_B(k, j, order);
  const auto t = PuiseuxSeries::monomial(1, 1);
  const bool b_is_power = agree(b, pow_int(a, j + 1));
  const bool a_fixed_point = agree(a, PuiseuxSeries::constant(1) + t * pow_int(a, k + 1));
  return b_is_power && a_fixed_point;
}

PuiseuxSeries lagrange_phi(unsigned k, unsigned j) {
  const Rational e(k + 1, j + 1);
  return pow_int(PuiseuxSeries::constant(1) + PuiseuxSeries::monomial(1, e), j + 1);
}

LagrangeReport lagrange_check(unsigned k, unsigned j, long order) {
  if (j >= k) throw std::invalid_argument("lagrange_check: need 0 <= j < k");
  Rational e(k + 1, j + 1);
  e.canonicalize();
  // F's exponents are 1 + m e; keep every one below `order`.
  Rational span = Rational(order - 1) / e;
  const long terms = static_cast<long>(mpz_class(span.get_num() / span.get_den()).get_si()) + 1;
  return lagrange_check(k, j, order, build_A_B(k, j, terms).second);
}

LagrangeReport lagrange_check(unsigned k, unsigned j, long order, const PuiseuxSeries& b) {
  if (j >= k) throw std::invalid_argument("lagrange_check: need 0 <= j < k");
  Rational e(k + 1, j + 1);
  e.canonicalize();
  const PuiseuxSeries f = PuiseuxSeries::monomial(1, 1) * substitute_monomial(b, e);
  const PuiseuxSeries phi = lagrange_phi(k, j);
  Rational limit(order);
  if (auto n = f.order(); n && *n < limit) limit = *n;

  LagrangeReport report;
  for (long t = 1;; ++t) {
    Rational r(t, static_cast<long>(j + 1));
    r.canonicalize();
    if (r >= limit) break;
    const Rational lhs = f.coefficient(r);
    const Rational rhs = pow_rational(phi.truncated(r), r).coefficient(r - 1) / r;
    ++report.checked;
    if (lhs != rhs && report.passed) {
      report.passed = false;
      report.first_failure = r;
    }
  }
  return report;
}

}  // namespace modkperm
