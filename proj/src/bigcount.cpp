#include "modkperm/bigcount.hpp"

#include <stdexcept>

namespace modkperm {

BigCount factorial(unsigned long n) {
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigCount binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  // Multiplicative formula; each partial quotient is itself a binomial.
  BigCount out = 1;
  if (k > n - k) k = n - k;
  for (unsigned long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out = exact_div(out, i);
  }
  return out;
}

BigCount power(const BigCount& base, unsigned long exponent) {
  BigCount out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigCount exact_div(const BigCount& numerator, const BigCount& denominator) {
  if (denominator == 0) throw std::logic_error("exact_div: division by zero");
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    throw std::logic_error("exact_div: " + numerator.get_str() + " is not divisible by " +
                           denominator.get_str());
  }
  BigCount out;
  mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return out;
}

}  // namespace modkperm
