#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modkperm/counting.hpp"
#include "modkperm/modk.hpp"

using namespace modkperm;

namespace {

Pattern P(const char* w) { return Pattern::parse(w); }

BigCount oracle(int n, int k, int r, std::vector<Pattern> forbidden) {
  return count_brute(AvoidanceQuery{{n, k, r}, std::move(forbidden)});
}

// Fuss-Catalan numbers from the recurrence F = 1 + z F^p, by repeated
// truncated polynomial multiplication over machine integers.
std::vector<unsigned long long> fuss_by_iteration(unsigned p, unsigned terms) {
  std::vector<unsigned long long> f(terms, 0);
  f[0] = 1;
  for (unsigned pass = 0; pass < terms; ++pass) {
    std::vector<unsigned long long> pw(terms, 0);
    pw[0] = 1;
    for (unsigned e = 0; e < p; ++e) {
      std::vector<unsigned long long> next(terms, 0);
      for (unsigned i = 0; i < terms; ++i)
        for (unsigned j = 0; i + j < terms; ++j) next[i + j] += pw[i] * f[j];
      pw = next;
    }
    std::vector<unsigned long long> g(terms, 0);
    g[0] = 1;
    for (unsigned i = 1; i < terms; ++i) g[i] = pw[i - 1];
    f = g;
  }
  return f;
}

}  // namespace

TEST_CASE("fuss_catalan table") {
  CHECK(fuss_catalan(3, 3) == 12);
  CHECK(fuss_catalan(5, 4) == 969);
  CHECK(fuss_catalan(8, 5) == 2330445);
  for (unsigned p = 1; p <= 6; ++p) CHECK(fuss_catalan(0, p) == 1);
  for (unsigned p = 1; p <= 5; ++p) {
    const auto want = fuss_by_iteration(p, 9);
    for (unsigned m = 0; m < 9; ++m) CHECK(fuss_catalan(m, p) == static_cast<unsigned long>(want[m]));
  }
  CHECK_THROWS_AS(fuss_catalan(3, 0), std::invalid_argument);
}

TEST_CASE("raney") {
  CHECK(raney(2, 4, 2) == 9);
  for (unsigned p = 1; p <= 5; ++p) {
    CHECK(raney(0, p, 3) == 1);
    for (unsigned m = 0; m <= 10; ++m) CHECK(raney(m, p, 1) == fuss_catalan(m, p));
  }
}

TEST_CASE("a_k") {
  CHECK(a_k_recursive(4, 2) == 3);
  CHECK(a_k_recursive(6, 3) == 4);
  CHECK(a_k_closed(6, 3) == 4);
  CHECK(a_k_closed(5, 2) == 7);
  for (unsigned k = 1; k <= 6; ++k) {
    CHECK(a_k_recursive(0, k) == 1);
    CHECK(a_k_closed(0, k) == 1);
  }
  for (unsigned k = 1; k <= 6; ++k) {
    const auto seq = a_k_sequence(60, k);
    for (unsigned n = 0; n <= 60; ++n) CHECK(seq[n] == a_k_closed(n, k));
  }
}

TEST_CASE("a_k sits inside the Raney numbers") {
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned m = 0; m <= 12; ++m) {
      CHECK(a_k_closed(k * m, k) == fuss_catalan(m, k + 1));
      for (unsigned j = 0; j < k; ++j) CHECK(a_k_closed(k * m + j, k) == raney(m, k + 1, j + 1));
    }
}

TEST_CASE("a_k(km) splits at any residue r") {
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned r = 0; r < k; ++r)
      for (unsigned m = 1; m <= 12; ++m) {
        BigCount sum = 0;
        for (unsigned j = 0; j < m; ++j) sum += a_k_closed(k * j + r, k) * a_k_closed(k * (m - j) - r - 1, k);
        CHECK(sum == a_k_closed(k * m, k));
      }
}

TEST_CASE("fibonacci") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(5) == 5);
  CHECK(fibonacci(11) == 89);
  CHECK(fibonacci(12) == 144);
  CHECK_THROWS_AS(fibonacci(0), std::invalid_argument);
}

TEST_CASE("mp_single_count examples") {
  CHECK(mp_single_count(6, 3, 1, P("132")) == 4);
  CHECK(mp_single_count(9, 3, 2, P("312")) == 4);
  CHECK(mp_single_count(4, 2, 1, P("231")) == 3);
  CHECK(mp_single_count(0, 4, 3, P("123")) == 1);
  CHECK_THROWS_AS(mp_single_count(6, 2, 1, P("123")), UncoveredFormula);
  CHECK_THROWS_AS(mp_single_count(6, 2, 2, P("231")), UncoveredFormula);
  CHECK_THROWS_AS(mp_single_count(6, 3, 1, P("1234")), UncoveredFormula);
}

TEST_CASE("mp_single_count matches the oracle wherever it answers") {
  for (int k = 1; k <= 5; ++k)
    for (int r = 1; r <= k; ++r)
      for (int n = 0; n <= 10; ++n)
        for (const auto& sigma : length3_patterns()) {
          try {
            const auto v = mp_single_count(static_cast<unsigned>(n), static_cast<unsigned>(k), static_cast<unsigned>(r), sigma);
            CHECK_MESSAGE(v == oracle(n, k, r, {sigma}), "n=", n, " k=", k, " r=", r, " ", sigma.word());
          } catch (const UncoveredFormula&) {
          }
        }
}

TEST_CASE("pair_case letters") {
  CHECK(pair_case(P("132"), P("123")) == 'A');
  CHECK(pair_case(P("123"), P("213")) == 'A');
  CHECK(pair_case(P("312"), P("123")) == 'B');
  CHECK(pair_case(P("321"), P("123")) == 'C');
  CHECK(pair_case(P("213"), P("132")) == 'D');
  CHECK(pair_case(P("312"), P("213")) == 'E');
  CHECK(pair_case(P("312"), P("231")) == 'F');
  CHECK(pair_case(P("213"), P("321")) == 'G');
  CHECK(pair_case(P("312"), P("321")) == 'I');
  CHECK_THROWS_AS(pair_case(P("132"), P("132")), std::invalid_argument);
}

TEST_CASE("pair_count examples") {
  CHECK(pair_count(8, 2, P("321"), P("132")).value == 7);
  CHECK(pair_count(5, 2, P("312"), P("231")).value == 5);
  const auto a = pair_count(7, 3, P("132"), P("123"));
  CHECK(a.value == 1);
  CHECK(a.status == FormulaStatus::proved_closed_form);
  CHECK(pair_count(6, 3, P("132"), P("123")).status == FormulaStatus::brute_force_only);
  CHECK(pair_count(5, 2, P("231"), P("321")).status == FormulaStatus::identity_only);
  CHECK(to_string(FormulaStatus::identity_only) == "identity-only");
}

TEST_CASE("case C small lengths come from the oracle") {
  const std::vector<BigCount> want{1, 1, 1, 0, 1};
  for (unsigned n = 0; n <= 4; ++n) {
    const auto res = pair_count(n, 2, P("123"), P("321"));
    CHECK(res.value == want[n]);
    CHECK(res.status == FormulaStatus::brute_force_only);
  }
  CHECK(pair_count(5, 2, P("123"), P("321")).value == 0);
}

TEST_CASE("pair_count matches the oracle for every pair, k <= 4, n <= 12") {
  const auto& p = length3_patterns();
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= (k == 1 ? 9 : 12); ++n)
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
          CHECK_MESSAGE(pair_count(static_cast<unsigned>(n), static_cast<unsigned>(k), p[i], p[j]).value ==
                            oracle(n, k, 1, {p[i], p[j]}),
                        "n=", n, " k=", k, " ", p[i].word(), ",", p[j].word());
}

TEST_CASE("Lambert sum over compositions") {
  for (unsigned p = 1; p <= 4; ++p)
    for (unsigned n = 1; n <= 8; ++n) {
      // Dynamic programming over the p parts.
      std::vector<BigCount> ways(n, 0);
      ways[0] = 1;
      for (unsigned part = 0; part < p; ++part) {
        std::vector<BigCount> next(n, 0);
        for (unsigned s = 0; s < n; ++s)
          for (unsigned a = 0; s + a < n; ++a) next[s + a] += ways[s] * fuss_catalan(a, p);
        ways = next;
      }
      CHECK(ways[n - 1] == fuss_catalan(n, p));
    }
}
