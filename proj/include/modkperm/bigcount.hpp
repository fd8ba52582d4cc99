#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace modkperm {

/// Exact nonnegative count. Every counting formula returns one of these.
using BigCount = mpz_class;

BigCount factorial(unsigned long n);
/// binom(n, k); zero when k > n.
BigCount binomial(unsigned long n, unsigned long k);
BigCount power(const BigCount& base, unsigned long exponent);

/// numerator / denominator, throwing std::logic_error if the division leaves a
/// remainder. The closed forms here always divide exactly; a remainder means a
/// transcription bug.
BigCount exact_div(const BigCount& numerator, const BigCount& denominator);

inline std::string to_string(const BigCount& c) { return c.get_str(); }

}  // namespace modkperm
