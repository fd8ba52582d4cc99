#include "modkperm/counting.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "modkperm/modk.hpp"

namespace modkperm {

BigCount fuss_catalan(unsigned m, unsigned p) {
  if (p < 1) throw std::invalid_argument("fuss_catalan: p must be >= 1");
  const unsigned long pm = static_cast<unsigned long>(p) * m;
  BigCount first = exact_div(binomial(pm + 1, m), BigCount(pm + 1));
  BigCount second = exact_div(binomial(pm, m), BigCount(static_cast<unsigned long>(p - 1) * m + 1));
  if (first != second) {
    throw std::logic_error("fuss_catalan: the two forms disagree at m=" + std::to_string(m) +
                           ", p=" + std::to_string(p));
  }
  return first;
}

BigCount raney(unsigned m, unsigned p, unsigned r) {
  if (p < 1 || r < 1) throw std::invalid_argument("raney: p and r must be >= 1");
  const unsigned long top = static_cast<unsigned long>(m) * p + r;
  return exact_div(BigCount(r) * binomial(top, m), BigCount(top));
}

std::vector<BigCount> a_k_sequence(unsigned n_max, unsigned k) {
  if (k < 1) throw std::invalid_argument("a_k: k must be >= 1");
  std::vector<BigCount> a(n_max + 1);
  a[0] = 1;
  for (unsigned n = 0; n < n_max; ++n) {
    BigCount next = 0;
    for (unsigned i = 0; i <= n; i += k) next += a[i] * a[n - i];
    a[n + 1] = std::move(next);
  }
  return a;
}

BigCount a_k_recursive(unsigned n, unsigned k) { return a_k_sequence(n, k)[n]; }

BigCount a_k_closed(unsigned n, unsigned k) {
  if (k < 1) throw std::invalid_argument("a_k: k must be >= 1");
  const unsigned long m = n / k;
  const unsigned long j = n % k;
  const unsigned long top = (k + 1ul) * m + j;
  return exact_div(BigCount(j + 1) * binomial(top, n), BigCount(static_cast<unsigned long>(n) + 1));
}

BigCount fibonacci(unsigned n) {
  if (n < 1) throw std::invalid_argument("fibonacci: n must be >= 1");
  BigCount prev = 0, cur = 1;
  for (unsigned i = 1; i < n; ++i) {
    BigCount next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

std::string describe(unsigned n, unsigned k, unsigned r, const Pattern& sigma) {
  return "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", r=" + std::to_string(r) +
         ", sigma=" + sigma.word();
}

BigCount pow2(unsigned e) { return power(2, e); }

// |MP_312(n,k,r)| for k >= 3 and n >= 1.
BigCount only_identity_312(unsigned n, unsigned k, unsigned r) {
  if (r == 1) return 1;
  if (r == 2 && n % k == 0) return pow2(n / k - 1);
  return 0;
}

}  // namespace

BigCount mp_single_count(unsigned n, unsigned k, unsigned r, const Pattern& sigma) {
  if (sigma.size() != 3) throw UncoveredFormula("only length-3 patterns are covered: " + sigma.word());
  ModKClass{static_cast<int>(n), static_cast<int>(k), static_cast<int>(r)}.validate();
  if (n == 0) return 1;

  const auto w = sigma.word();
  // Without a congruence restriction every length-3 class is Catalan.
  if (k == 1) return a_k_closed(n, 1);

  if (w == "132" || w == "213") {
    if (r == 1 || n % k == 0) return a_k_closed(n, k);
    return 0;
  }
  if (w == "231" || w == "312") {
    if (k == 2) {
      if (r == 1) return a_k_closed(n, 2);
      throw UncoveredFormula("no proved formula for " + describe(n, k, r, sigma));
    }
    if (w == "312") return only_identity_312(n, k, r);
    return only_identity_312(n, k, static_cast<unsigned>(revflip_remainder(static_cast<int>(r), static_cast<int>(k))));
  }
  throw UncoveredFormula("no proved formula for " + describe(n, k, r, sigma));
}

std::string to_string(FormulaStatus s) {
  switch (s) {
    case FormulaStatus::proved_closed_form: return "proved-closed-form";
    case FormulaStatus::identity_only: return "identity-only";
    case FormulaStatus::brute_force_only: return "brute-force-only";
  }
  return "?";
}

namespace {

using PairKey = std::pair<std::string, std::string>;

PairKey sorted_key(const Pattern& a, const Pattern& b) {
  auto x = a.word(), y = b.word();
  if (y < x) std::swap(x, y);
  return {x, y};
}

// Smallest pair in the orbit under revflip and inverse; both maps preserve
// MP(n, k, 1) and act on pattern pairs.
PairKey canonical_pair(const Pattern& sigma, const Pattern& tau) {
  PairKey best = sorted_key(sigma, tau);
  std::vector<std::pair<Pattern, Pattern>> frontier{{sigma, tau}};
  std::vector<PairKey> seen{best};
  while (!frontier.empty()) {
    auto [a, b] = frontier.back();
    frontier.pop_back();
    for (auto image : {std::pair{revflip(a), revflip(b)}, std::pair{inverse(a), inverse(b)}}) {
      auto key = sorted_key(image.first, image.second);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      best = std::min(best, key);
      frontier.push_back(image);
    }
  }
  return best;
}

bool mentions(const Pattern& sigma, const Pattern& tau, const char* word) {
  return sigma.word() == word || tau.word() == word;
}

}  // namespace

char pair_case(const Pattern& sigma, const Pattern& tau) {
  if (sigma.size() != 3 || tau.size() != 3) throw std::invalid_argument("pair_case: length-3 patterns only");
  if (sigma == tau) throw std::invalid_argument("pair_case: patterns must differ");
  static const std::map<PairKey, char> table = {
      {{"123", "132"}, 'A'}, {{"123", "231"}, 'B'}, {{"123", "321"}, 'C'}, {{"132", "213"}, 'D'},
      {{"132", "231"}, 'E'}, {{"231", "312"}, 'F'}, {{"132", "321"}, 'G'}, {{"231", "321"}, 'I'},
  };
  return table.at(canonical_pair(sigma, tau));
}

PairFormulaResult pair_count(unsigned n, unsigned k, const Pattern& sigma, const Pattern& tau) {
  const char letter = pair_case(sigma, tau);
  if (k < 1) throw std::invalid_argument("pair_count: k must be >= 1");

  auto proved = [&](BigCount v) { return PairFormulaResult{std::move(v), FormulaStatus::proved_closed_form, letter}; };
  auto brute = [&] {
    AvoidanceQuery q{{static_cast<int>(n), static_cast<int>(k), 1}, {sigma, tau}};
    return PairFormulaResult{count_brute(q), FormulaStatus::brute_force_only, letter};
  };

  // The table's formulas start at length 1.
  if (n == 0) return brute();
  // No permutation of length >= 5 avoids both 123 and 321.
  if (letter == 'C') return n >= 5 ? proved(0) : brute();

  if (k == 1) {
    if (letter == 'D') return proved(pow2(n - 1));
    if (letter == 'G') return proved(binomial(n, 2) + 1);
    return brute();
  }

  if (k == 2) {
    const unsigned m = n / 2;
    const bool even = n % 2 == 0;
    switch (letter) {
      case 'A': return proved(even ? pow2(m - 1) : BigCount(1));
      case 'B': return proved(even ? BigCount(m) : binomial(m, 2) + 1);
      case 'D': return proved(even ? pow2(m - 1) : fibonacci(2 * m + 1));
      case 'E': return proved(even ? pow2(m - 1) : pow2(m));
      case 'F': return proved(fibonacci(n));
      case 'G': return proved(binomial(m, 2) + 1);
      case 'I': return {1, FormulaStatus::identity_only, letter};
    }
    return brute();
  }

  const unsigned m = n / k;
  const unsigned l = n % k;
  switch (letter) {
    case 'A':
      if (l == 0 || m == 0) return brute();
      return proved((k == 3 && (l == 1 || l == 2)) || (k == 4 && l == 2) ? 1 : 0);
    case 'D': return proved(l == 0 ? pow2(m - 1) : fibonacci(2 * m + 1));
    case 'G': return proved(binomial(m, 2) + 1);
    default: break;
  }
  // Every remaining pair contains 231 or 312, whose k >= 3 class is the
  // identity alone. The identity contains 123 from length 3 on, so pairs with
  // 123 go to the oracle.
  if (mentions(sigma, tau, "123")) return brute();
  return {1, FormulaStatus::identity_only, letter};
}

}  // namespace modkperm
