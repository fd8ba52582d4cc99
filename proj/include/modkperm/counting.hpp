#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "modkperm/bigcount.hpp"
#include "modkperm/permutation.hpp"

namespace modkperm {

/// Raised when a closed form is requested for a (n, k, r, patterns)
/// combination that no proved formula covers. Never answered by guessing.
class UncoveredFormula : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// C_m^p = binom(pm+1, m) / (pm+1); also checked against binom(pm, m) / ((p-1)m+1).
BigCount fuss_catalan(unsigned m, unsigned p);

/// A_m(p, r) = r / (mp+r) * binom(mp+r, m).
BigCount raney(unsigned m, unsigned p, unsigned r);

/// a_k(n) from a_k(n+1) = sum_{0<=i<=n, k|i} a_k(i) a_k(n-i), a_k(0) = 1.
BigCount a_k_recursive(unsigned n, unsigned k);
/// a_k(0), ..., a_k(n_max) by the same recursion.
std::vector<BigCount> a_k_sequence(unsigned n_max, unsigned k);

/// a_k(km+j) = (j+1)/(km+j+1) * binom((k+1)m+j, km+j), 0 <= j < k.
BigCount a_k_closed(unsigned n, unsigned k);

/// F_1 = F_2 = 1. Requires n >= 1.
BigCount fibonacci(unsigned n);

/// |MP_sigma(n, k, r)| for sigma of length 3, from the proved formulas.
/// Throws UncoveredFormula for combinations without one (e.g. 231/312 with
/// k = 2 and r = 2, or 123/321 with k >= 2).
BigCount mp_single_count(unsigned n, unsigned k, unsigned r, const Pattern& sigma);

enum class FormulaStatus {
  proved_closed_form,
  identity_only,
  brute_force_only,
};

std::string to_string(FormulaStatus s);

struct PairFormulaResult {
  BigCount value;
  FormulaStatus status;
  /// Table letter (A-I) of the unordered pair, after symmetry reduction.
  char table_case;
};

/// Case letter of an unordered pair of distinct length-3 patterns; pairs
/// related by revflip or inverse share a letter (A to G, or I).
char pair_case(const Pattern& sigma, const Pattern& tau);

/// |MP_{sigma,tau}(n, k)| (remainder r = 1). Values without a proved formula
/// are produced by the backtracking oracle and flagged brute_force_only.
PairFormulaResult pair_count(unsigned n, unsigned k, const Pattern& sigma, const Pattern& tau);

}  // namespace modkperm
