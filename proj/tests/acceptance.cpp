// Acceptance run: one PASS/FAIL line per criterion, with its time budget.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "modkperm/counting.hpp"
#include "modkperm/modk.hpp"
#include "modkperm/sef.hpp"
#include "modkperm/series.hpp"

using namespace modkperm;

namespace {

AvoidanceQuery query(int n, int k, int r, std::vector<Pattern> forbidden) { return {{n, k, r}, std::move(forbidden)}; }

const Pattern& pat(const char* w) {
  static std::vector<Pattern> cache;
  for (const auto& p : cache)
    if (p.word() == w) return p;
  cache.reserve(16);
  return cache.emplace_back(Pattern::parse(w));
}

BigCount binom(long n, long m) {
  if (m < 0 || m > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
  return out;
}

// a_k(km + j) as the Raney number A_m(k+1, j+1).
BigCount a_k_raney(int n, int k) {
  const long m = n / k, j = n % k;
  const long top = m * (k + 1) + j + 1;
  return BigCount(binom(top, m) * (j + 1) / top);
}

// |MP(n,k)|: positions and values split into the same residue classes.
BigCount mp_size(int n, int k) {
  BigCount out = 1;
  for (int c = 0; c < k; ++c) {
    int size = 0;
    for (int i = 1; i <= n; ++i) size += i % k == c;
    for (int f = 2; f <= size; ++f) out *= f;
  }
  return out;
}

BigCount fib(int n) {
  BigCount a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    a += b;
    std::swap(a, b);
  }
  return a;
}

Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string where(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

struct Criterion {
  std::string name;
  double budget;
  std::function<std::string()> run;  // empty string on success
};

std::string closed_vs_recursion() {
  for (unsigned k = 1; k <= 6; ++k)
    for (unsigned n = 0; n <= 60; ++n)
      if (a_k_recursive(n, k) != a_k_closed(n, k)) return where(static_cast<int>(n), static_cast<int>(k));
  return {};
}

std::string fuss_table() {
  const std::vector<std::vector<long>> table{
      {1, 1, 1, 1, 1, 1, 1, 1},
      {1, 2, 5, 14, 42, 132, 429, 1430},
      {1, 3, 12, 55, 273, 1428, 7752, 43263},
      {1, 4, 22, 140, 969, 7084, 53820, 420732},
      {1, 5, 35, 285, 2530, 23751, 231880, 2330445},
  };
  int entries = 0;
  for (unsigned p = 1; p <= 5; ++p)
    for (unsigned n = 1; n <= 8; ++n, ++entries)
      if (fuss_catalan(n, p) != table[p - 1][n - 1]) return "p=" + std::to_string(p) + " n=" + std::to_string(n);
  return entries == 40 ? "" : "table size";
}

std::string main_theorem() {
  int cases = 0;
  for (int k = 2; k <= 5; ++k)
    for (int n = 0; mp_size(n, k) <= 1'000'000; ++n, ++cases)
      for (const char* s : {"132", "213"})
        if (count_brute(query(n, k, 1, {pat(s)})) != a_k_raney(n, k)) return where(n, k) + " sigma=" + s;
  return cases >= 40 ? "" : "too few cases";
}

std::string only_identity() {
  for (int k = 3; k <= 5; ++k)
    for (int r = 1; r <= k; ++r)
      for (int n = 1; n <= 12; ++n) {
        BigCount want = 0;
        if (r == 1) want = 1;
        if (r == 2 && n % k == 0) want = BigCount(1) << static_cast<unsigned>(n / k - 1);
        if (count_brute(query(n, k, r, {pat("312")})) != want) return where(n, k) + " r=" + std::to_string(r);
      }
  return {};
}

std::string kgeq3() {
  for (int k = 3; k <= 4; ++k)
    for (int r = 1; r <= k; ++r)
      for (int n = 0; n <= 12; ++n) {
        const BigCount want = r == 1 || n % k == 0 ? a_k_raney(n, k) : BigCount(0);
        for (const char* s : {"132", "213"})
          if (count_brute(query(n, k, r, {pat(s)})) != want) return where(n, k) + " r=" + std::to_string(r) + " " + s;
      }
  return {};
}

std::string sef_bijection() {
  long cases = 0;
  for (int n = 0; n <= 8; ++n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
      const Permutation pi(v);
      const auto f = perm_to_sef(pi);
      if (sef_to_perm(f) != pi) return "round trip " + to_string(pi);
      for (int k = 2; k <= 4; ++k) {
        bool congruent = true;
        for (int i = 1; i <= n; ++i) congruent = congruent && (f(static_cast<std::size_t>(i)) - i) % k == 0;
        bool alternating = true;
        for (int i = 1; i <= n; ++i) alternating = alternating && (v[static_cast<std::size_t>(i - 1)] - i) % k == 0;
        if (congruent != alternating) return "k=" + std::to_string(k) + " " + to_string(pi);
      }
      if (n == 8) ++cases;
    } while (std::next_permutation(v.begin(), v.end()));
  }
  return cases == 40320 ? "" : "case count";
}

std::string mp_c_dyck() {
  const auto words = generate_mp_c_all(7, 3);
  if (words.size() != 9) return "|MP_C(7,3)| = " + std::to_string(words.size());
  for (const auto& w : words)
    if (!is_in_L_k(catalan_word_to_dyck(w), 3)) return "not in L^3: " + to_string(w);
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 16; ++n) {
      BigCount generated = 0;
      auto stream = generate_mp_c(n, k);
      while (stream.next()) ++generated;
      if (generated != count_mp_c_closed(static_cast<unsigned>(n), static_cast<unsigned>(k))) return where(n, k);
    }
  return {};
}

std::string table2() {
  const auto& p = length3_patterns();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (int n = 1; n <= 12; ++n)
        if (pair_count(static_cast<unsigned>(n), 2, p[i], p[j]).value != count_brute(query(n, 2, 1, {p[i], p[j]})))
          return "n=" + std::to_string(n) + " " + p[i].word() + "," + p[j].word();
  const auto value = [](int n, const char* s, const char* t) {
    return count_brute(query(n, 2, 1, {pat(s), pat(t)}));
  };
  if (value(11, "213", "132") != fib(11) || fib(11) != 89) return "p_{213,132}(11)";
  if (value(12, "312", "231") != fib(12) || fib(12) != 144) return "p_{312,231}(12)";
  if (value(12, "321", "132") != binom(6, 2) + 1) return "p_{321,132}(12)";
  return {};
}

// The unique element of MP_{132,123}(km + l, k), written out block by block.
std::vector<int> case_a_witness(int k, int l, int m) {
  std::vector<int> w;
  for (int i = 1; i <= l; ++i) w.push_back(k * m + i);
  for (int b = m - 1; b >= 0; --b) {
    const int o = k * b;
    if (k == 3 && l == 1) w.insert(w.end(), {o + 2, o + 3, o + 1});
    if (k == 3 && l == 2) w.insert(w.end(), {o + 3, o + 1, o + 2});
    if (k == 4 && l == 2) w.insert(w.end(), {o + 3, o + 4, o + 1, o + 2});
  }
  return w;
}

std::string mod_k_pairs() {
  for (auto [k, l] : {std::pair{3, 1}, {3, 2}, {4, 2}})
    for (int m = 1; k * m + l <= 12; ++m) {
      const int n = k * m + l;
      const auto found = generate_all(query(n, k, 1, {pat("132"), pat("123")}));
      if (found != std::vector<Permutation>{Permutation(case_a_witness(k, l, m))}) return "case A " + where(n, k);
      if (pair_count(static_cast<unsigned>(n), static_cast<unsigned>(k), pat("132"), pat("123")).value != 1)
        return "case A formula " + where(n, k);
    }
  for (int k = 3; k <= 4; ++k)
    for (int n = 1; n <= 12; ++n) {
      const int m = n / k;
      const BigCount d = n % k == 0 ? BigCount(1) << static_cast<unsigned>(m - 1) : fib(2 * m + 1);
      if (count_brute(query(n, k, 1, {pat("132"), pat("213")})) != d ||
          pair_count(static_cast<unsigned>(n), static_cast<unsigned>(k), pat("132"), pat("213")).value != d)
        return "case D " + where(n, k);
      const BigCount g = binom(m, 2) + 1;
      for (const char* s : {"132", "213"})
        if (count_brute(query(n, k, 1, {pat(s), pat("321")})) != g ||
            pair_count(static_cast<unsigned>(n), static_cast<unsigned>(k), pat(s), pat("321")).value != g)
          return "case G " + where(n, k) + " " + s;
    }
  return {};
}

std::string remarks() {
  const std::vector<BigCount> a{1, 1, 1, 3, 3, 10, 11, 37, 44, 146, 185, 603, 808, 2576};
  const std::vector<BigCount> b{1, 1, 1, 2, 3, 6, 11, 22, 44, 89, 185, 382, 808, 1702};
  if (remark_sequence(pat("123"), 14) != a) return "123 sequence";
  if (remark_sequence(pat("321"), 14) != b) return "321 sequence";
  return {};
}

// Highest consecutive pair of hole values, then what stands between them.
bool hole_structure(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<bool> maximum(static_cast<std::size_t>(n + 2), false);
  std::vector<int> pos(static_cast<std::size_t>(n + 1));
  int best = 0;
  for (int i = 0; i < n; ++i) {
    if (v[static_cast<std::size_t>(i)] > best) maximum[static_cast<std::size_t>(v[static_cast<std::size_t>(i)])] = true;
    best = std::max(best, v[static_cast<std::size_t>(i)]);
    pos[static_cast<std::size_t>(v[static_cast<std::size_t>(i)])] = i;
  }
  int h = 0;
  for (int x = 1; x < n; ++x)
    if (!maximum[static_cast<std::size_t>(x)] && !maximum[static_cast<std::size_t>(x + 1)]) h = x;
  if (h == 0) return false;
  const int a = pos[static_cast<std::size_t>(h)], b = pos[static_cast<std::size_t>(h + 1)];
  if (b == a + 1) return true;
  if (b < a || (b - a - 1) % 2 != 0) return false;
  for (int i = a + 1; i < b; ++i) {
    const int x = v[static_cast<std::size_t>(i)];
    if (!maximum[static_cast<std::size_t>(x)]) return false;
    if (i > a + 1 && x != v[static_cast<std::size_t>(i - 1)] + 1) return false;
  }
  return true;
}

std::string pap_321() {
  for (int n = 1; n <= 10; ++n)
    for (const auto& pi : generate(query(n, 2, 1, {pat("321")}))) {
      if (pi.is_identity()) continue;
      const std::vector<int> v(pi.begin(), pi.end());
      if (!hole_structure(v)) return "oracle rejects " + to_string(pi);
      if (!check_321_pap_structure(pi)) return "library rejects " + to_string(pi);
    }
  return {};
}

std::string series_suite() {
  using S = PuiseuxSeries;
  for (unsigned p = 1; p <= 5; ++p) {
    const auto f = solve_fuss_series(p, 12);
    for (unsigned m = 0; m < 12; ++m)
      if (f.coefficient(static_cast<long>(m)) != Rational(BigCount(binom(p * m + 1, m) / (p * m + 1))))
        return "fuss p=" + std::to_string(p);
  }
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned j = 0; j <= k; ++j)
      if (!check_functional_equations(k, j, 10)) return "functional equations k=" + std::to_string(k);
  for (auto [k, j] : {std::pair{2u, 0u}, {2u, 1u}, {3u, 1u}, {3u, 2u}, {4u, 3u}})
    if (!lagrange_check(k, j, 8).passed) return "lagrange k=" + std::to_string(k) + " j=" + std::to_string(j);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 4), low(-3, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const long d = den(rng);
    S h = S::zero(Rational(4));
    for (long key = low(rng) * d - 1; key < 4 * d; ++key) h = h + S::monomial(coef(rng), frac(key, d));
    if (derivative(h).coefficient(-1) != 0) return "residue of a derivative";
    S f = S::monomial(coef(rng) == 0 ? 1 : 2, 1) + S::zero(Rational(5));
    for (long key = d + 1; key < 5 * d; ++key) f = f + S::monomial(frac(coef(rng), 3), frac(key, d));
    for (long e = -3; e <= 2; ++e)
      if ((pow_rational(f, e) * derivative(f)).coefficient(-1) != (e == -1 ? 1 : 0)) return "residue of f^j f'";
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"a_k recursion equals closed form, k 1..6, n 0..60", 1, closed_vs_recursion},
      {"Fuss-Catalan table, 40 entries", 0.1, fuss_table},
      {"132 and 213 counts equal a_k, k 2..5, |MP(n,k)| <= 10^6", 60, main_theorem},
      {"312 over MP(n,k,r): 1, 2^(n/k-1) or 0, k 3..5, n <= 12", 30, only_identity},
      {"132 and 213 over MP(n,k,r): a_k or 0, k 3..4, n <= 12", 30, kgeq3},
      {"SEF round trip n <= 8 and congruence criterion k 2..4", 10, sef_bijection},
      {"MP_C(7,3) has 9 words in L^3; generation vs closed form k <= 4, n <= 16", 10, mp_c_dyck},
      {"pair counts vs oracle, 15 pairs, k = 2, n 1..12, values 89 144 16", 60, table2},
      {"mod-k pair cases A, D, G, k 3..4, n <= 12", 60, mod_k_pairs},
      {"remark sequences, 14 terms each", 90, remarks},
      {"hole-value structure of 321-avoiding PAPs, n <= 10", 10, pap_321},
      {"series: Fuss, functional equations, Lagrange, residues", 5, series_suite},
  };
  int failures = 0;
  std::cout << std::fixed << std::setprecision(3);
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && secs >= c.budget) detail = "over budget";
    const bool pass = detail.empty();
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << c.name << " (" << secs << " s, budget " << c.budget
              << " s)";
    if (!pass) std::cout << ": " << detail;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
