#include "modkperm/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "modkperm/counting.hpp"
#include "modkperm/modk.hpp"
#include "modkperm/sef.hpp"
#include "modkperm/series.hpp"
#include "modkperm/text.hpp"

namespace modkperm {

namespace {

using Body = std::function<std::string()>;

class Suite {
 public:
  explicit Suite(const VerifyConfig& config) : config_(config) {}

  int n(int fallback) const { return config_.max_n.value_or(fallback); }
  int k(int fallback) const { return config_.max_k.value_or(fallback); }

  void check(std::string label, const Body& body) {
    CheckResult result{std::move(label), false, {}};
    try {
      result.detail = body();
      result.passed = result.detail.empty();
    } catch (const std::exception& e) {
      result.detail = e.what();
    }
    results_.push_back(std::move(result));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  VerifyConfig config_;
  std::vector<CheckResult> results_;
};

std::string range(const char* var, int hi) { return std::string(var) + "≤" + std::to_string(hi); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_trusted(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool naive_contains(std::span<const int> w, const Pattern& sigma) {
  const auto n = w.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const int t[3] = {w[a], w[b], w[c]};
        if (standardize(t) == sigma.shape()) return true;
      }
  return false;
}

AvoidanceQuery query(int n, int k, int r, std::vector<Pattern> forbidden = {}) {
  return AvoidanceQuery{{n, k, r}, std::move(forbidden)};
}

std::string at(int n, int k, int r = 1) {
  return "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", r=" + std::to_string(r);
}

// ---------------------------------------------------------------- core

void core_suite(Suite& s) {
  const int nmax = s.n(7);
  s.check("contains_pattern == subsequence scan, length-3 patterns, " + range("n", nmax), [&]() -> std::string {
    for (int n = 0; n <= nmax; ++n)
      for (const auto& pi : all_permutations(n))
        for (const auto& sigma : length3_patterns())
          if (contains_pattern(pi, sigma) != naive_contains(pi.entries(), sigma))
            return to_string(pi) + " vs " + sigma.word();
    return {};
  });
  s.check("completes_pattern == occurrence ending at the last entry, " + range("n", nmax), [&]() -> std::string {
    for (int n = 1; n <= nmax; ++n)
      for (const auto& pi : all_permutations(n))
        for (const auto& sigma : length3_patterns()) {
          auto e = pi.entries();
          for (std::size_t len = 1; len <= e.size(); ++len) {
            bool ends_here = false;
            for (std::size_t a = 0; a + 1 < len; ++a)
              for (std::size_t b = a + 1; b + 1 < len; ++b) {
                const int t[3] = {e[a], e[b], e[len - 1]};
                ends_here = ends_here || standardize(t) == sigma.shape();
              }
            if (completes_pattern(e.first(len - 1), e[len - 1], sigma) != ends_here)
              return to_string(pi) + " prefix " + std::to_string(len) + " vs " + sigma.word();
          }
        }
    return {};
  });
  s.check("reverse, flip, inverse are involutions and revflip == reverse∘flip, " + range("n", nmax),
          [&]() -> std::string {
            for (int n = 0; n <= nmax; ++n)
              for (const auto& pi : all_permutations(n)) {
                if (reverse(reverse(pi)) != pi || flip(flip(pi)) != pi || inverse(inverse(pi)) != pi ||
                    revflip(pi) != reverse(flip(pi)) || compose(pi, inverse(pi)) != Permutation::identity(n))
                  return to_string(pi);
              }
            return {};
          });
  s.check("containment commutes with revflip and inverse, " + range("n", nmax), [&]() -> std::string {
    for (int n = 0; n <= nmax; ++n)
      for (const auto& pi : all_permutations(n))
        for (const auto& sigma : length3_patterns()) {
          const bool c = contains_pattern(pi, sigma);
          if (contains_pattern(revflip(pi), revflip(sigma)) != c || contains_pattern(inverse(pi), inverse(sigma)) != c)
            return to_string(pi) + " vs " + sigma.word();
        }
    return {};
  });
  s.check("revflip maps S_132(n) onto S_213(n) and inverse maps S_231(n) onto S_312(n), " + range("n", nmax),
          [&]() -> std::string {
            auto image = [](int n, const char* from, Permutation (*map)(const Permutation&)) {
              std::vector<Permutation> out;
              for (const auto& pi : generate(query(n, 1, 1, {Pattern::parse(from)}))) out.push_back(map(pi));
              std::sort(out.begin(), out.end());
              return out;
            };
            for (int n = 0; n <= nmax; ++n) {
              if (image(n, "132", revflip) != generate_all(query(n, 1, 1, {Pattern::parse("213")})))
                return "revflip, n=" + std::to_string(n);
              if (image(n, "231", inverse) != generate_all(query(n, 1, 1, {Pattern::parse("312")})))
                return "inverse, n=" + std::to_string(n);
            }
            return {};
          });
}

// ---------------------------------------------------------------- modk

void modk_suite(Suite& s) {
  const int nmax = s.n(9);
  const int kmax = s.k(4);
  s.check("generated MP(n,k,r) is lexicographic, alternating and of size (n/k)! products, " + range("k", kmax) +
              ", " + range("n", nmax),
          [&]() -> std::string {
            for (int k = 1; k <= kmax; ++k)
              for (int r = 1; r <= k; ++r)
                for (int n = 0; n <= nmax; ++n) {
                  BigCount seen = 0;
                  std::optional<Permutation> prev;
                  for (const auto& pi : generate(query(n, k, r))) {
                    if (!is_mod_k_alternating(pi, k, r) || (prev && !(*prev < pi))) return at(n, k, r);
                    prev = pi;
                    ++seen;
                  }
                  if (seen != count_mp(n, k, r)) return at(n, k, r) + ": " + to_string(seen);
                  const bool nonempty = r == 1 || n % k == 0;
                  if ((seen > 0) != nonempty) return at(n, k, r) + ": emptiness";
                }
            return {};
          });

  const int nbij = s.n(8);
  s.check("revflip maps MP_σ(n,k,r) onto MP_revflip(σ)(n,k,2−r), " + range("k", kmax) + ", " + range("n", nbij),
          [&]() -> std::string {
            for (int k = 1; k <= kmax; ++k)
              for (int r = 1; r <= k; ++r)
                for (int n = 0; n <= nbij; ++n)
                  for (const auto& sigma : length3_patterns()) {
                    std::vector<Permutation> image;
                    for (const auto& pi : generate(query(n, k, r, {sigma}))) image.push_back(revflip(pi));
                    std::sort(image.begin(), image.end());
                    if (image != generate_all(query(n, k, revflip_remainder(r, k), {revflip(sigma)})))
                      return at(n, k, r) + ", σ=" + sigma.word();
                  }
            return {};
          });
  s.check("inverse maps MP_σ(n,k) onto MP_σ⁻¹(n,k), " + range("k", kmax) + ", " + range("n", nbij),
          [&]() -> std::string {
            for (int k = 1; k <= kmax; ++k)
              for (int n = 0; n <= nbij; ++n)
                for (const auto& sigma : length3_patterns()) {
                  std::vector<Permutation> image;
                  for (const auto& pi : generate(query(n, k, 1, {sigma}))) image.push_back(inverse(pi));
                  std::sort(image.begin(), image.end());
                  if (image != generate_all(query(n, k, 1, {inverse(sigma)}))) return at(n, k) + ", σ=" + sigma.word();
                }
            return {};
          });
  s.check("count_brute == |generate| with 1 and 2 workers, " + range("k", kmax) + ", " + range("n", nbij),
          [&]() -> std::string {
            const auto& p = length3_patterns();
            for (int k = 1; k <= kmax; ++k)
              for (int n = 0; n <= nbij; ++n)
                for (std::size_t i = 0; i < p.size(); ++i) {
                  auto q = query(n, k, 1, {p[i], p[(i + 1) % p.size()]});
                  const BigCount expected = static_cast<unsigned long>(generate_all(q).size());
                  if (count_brute(q) != expected || count_brute(q, {2}) != expected) return at(n, k) + ", " + p[i].word();
                }
            return {};
          });
  const int ncount = s.n(10);
  const int kcount = s.k(5);
  s.check("count_mp(n,k,r) == count_brute with no patterns, zero unless r=1 or k|n, " + range("k", kcount) + ", " +
              range("n", ncount),
          [&]() -> std::string {
            for (int k = 1; k <= kcount; ++k)
              for (int r = 1; r <= k; ++r)
                for (int n = 0; n <= ncount; ++n) {
                  const auto brute = count_brute(query(n, k, r));
                  if (brute != count_mp(n, k, r) || (brute == 0) != (r != 1 && n % k != 0)) return at(n, k, r);
                  if (n % k == 0 && brute != power(factorial(static_cast<unsigned long>(n / k)), static_cast<unsigned long>(k)))
                    return at(n, k, r) + ": not ((n/k)!)^k";
                }
            return {};
          });
  s.check("MP(n,k) is closed under composition and inverse, 2≤k≤" + std::to_string(kmax) + ", " + range("n", nbij),
          [&]() -> std::string {
            for (int k = 2; k <= kmax; ++k)
              for (int n = 0; n <= nbij; ++n) {
                const auto group = generate_all(query(n, k, 1));
                for (const auto& a : group) {
                  if (!is_mod_k_alternating(inverse(a), k)) return at(n, k) + ", inverse of " + to_string(a);
                  for (const auto& b : group)
                    if (!is_mod_k_alternating(compose(a, b), k)) return at(n, k) + ", " + to_string(a) + "∘" + to_string(b);
                }
              }
            return {};
          });
  s.check("132-avoiding PAPs have n after n−1, or n odd in position 1, 2≤n≤" + std::to_string(ncount),
          [&]() -> std::string {
            for (int n = 2; n <= ncount; ++n)
              for (const auto& pi : generate(query(n, 2, 1, {Pattern::parse("132")}))) {
                std::vector<int> pos(static_cast<std::size_t>(n) + 1);
                for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(pi(static_cast<std::size_t>(i)))] = i;
                const bool after = pos[static_cast<std::size_t>(n)] > pos[static_cast<std::size_t>(n - 1)];
                if (!after && !(n % 2 == 1 && pi(1) == n)) return to_string(pi);
              }
            return {};
          });
  const int nrev = s.n(9);
  s.check("reverse maps P_132(2m) onto P*_231(2m), P_231(2m) onto P*_132(2m), P_132(2m+1) onto P_231(2m+1), " +
              range("n", nrev),
          [&]() -> std::string {
            auto reversed = [](int n, int r, const char* word) {
              std::vector<Permutation> out;
              for (const auto& pi : generate(query(n, 2, r, {Pattern::parse(word)}))) out.push_back(reverse(pi));
              std::sort(out.begin(), out.end());
              return out;
            };
            for (int n = 0; n <= nrev; ++n) {
              const int target = n % 2 == 0 ? 2 : 1;
              if (reversed(n, 1, "132") != generate_all(query(n, 2, target, {Pattern::parse("231")})) ||
                  reversed(n, 1, "231") != generate_all(query(n, 2, target, {Pattern::parse("132")})))
                return "n=" + std::to_string(n);
            }
            return {};
          });
  const int n321 = s.n(10);
  s.check("non-identity 321-avoiding PAPs: consecutive hole values, highest pair adjacent or split by an even "
          "run of consecutive left-to-right maxima, " + range("n", n321),
          [&]() -> std::string {
            for (int n = 1; n <= n321; ++n)
              for (const auto& pi : generate(query(n, 2, 1, {Pattern::parse("321")}))) {
                if (pi.is_identity()) continue;
                if (!check_321_pap_structure(pi)) return to_string(pi);
              }
            return {};
          });
}

// ---------------------------------------------------------------- counting

void counting_suite(Suite& s) {
  const int kmax = s.k(6);
  const int nmax = s.n(60);
  s.check("a_k recursion == closed form, " + range("k", kmax) + ", " + range("n", nmax), [&]() -> std::string {
    for (int k = 1; k <= kmax; ++k) {
      const auto seq = a_k_sequence(static_cast<unsigned>(nmax), static_cast<unsigned>(k));
      for (int n = 0; n <= nmax; ++n)
        if (seq[static_cast<std::size_t>(n)] != a_k_closed(static_cast<unsigned>(n), static_cast<unsigned>(k)))
          return at(n, k);
    }
    return {};
  });
  s.check("a_1(n) == Catalan numbers, " + range("n", nmax), [&]() -> std::string {
    for (unsigned n = 0; n <= static_cast<unsigned>(nmax); ++n)
      if (a_k_closed(n, 1) != exact_div(binomial(2 * n, n), BigCount(n + 1))) return "n=" + std::to_string(n);
    return {};
  });
  const int mmax = s.n(30);
  s.check("Fuss–Catalan two forms agree and equal Raney at r=1, p≤" + std::to_string(kmax) + ", " + range("m", mmax),
          [&]() -> std::string {
            for (unsigned p = 1; p <= static_cast<unsigned>(kmax); ++p)
              for (unsigned m = 0; m <= static_cast<unsigned>(mmax); ++m)
                if (fuss_catalan(m, p) != raney(m, p, 1)) return "m=" + std::to_string(m) + ", p=" + std::to_string(p);
            return {};
          });
  s.check("a_k(km+j) == Raney A_m(k+1, j+1), " + range("k", kmax) + ", " + range("m", mmax), [&]() -> std::string {
    for (unsigned k = 1; k <= static_cast<unsigned>(kmax); ++k)
      for (unsigned j = 0; j < k; ++j)
        for (unsigned m = 0; m <= static_cast<unsigned>(mmax); ++m)
          if (a_k_closed(k * m + j, k) != raney(m, k + 1, j + 1)) return "k=" + std::to_string(k) + ", m=" + std::to_string(m);
    return {};
  });
  s.check("a_k(km) == Σ_j a_k(kj+r) a_k(k(m−j)−r−1), " + range("k", kmax) + ", " + range("m", mmax) + ", all r",
          [&]() -> std::string {
            for (unsigned k = 1; k <= static_cast<unsigned>(kmax); ++k)
              for (unsigned r = 0; r < k; ++r)
                for (unsigned m = 1; m <= static_cast<unsigned>(mmax); ++m) {
                  BigCount sum = 0;
                  for (unsigned j = 0; j < m; ++j) sum += a_k_closed(k * j + r, k) * a_k_closed(k * (m - j) - r - 1, k);
                  if (sum != a_k_closed(k * m, k)) return "k=" + std::to_string(k) + ", m=" + std::to_string(m);
                }
            return {};
          });
  const int pl = s.k(4);
  const int nl = s.n(8);
  s.check("C_n^p == Σ over compositions of n−1 into p parts of Π C_{α_i}^p, p≤" + std::to_string(pl) + ", " +
              range("n", nl),
          [&]() -> std::string {
            for (unsigned p = 1; p <= static_cast<unsigned>(pl); ++p)
              for (unsigned n = 1; n <= static_cast<unsigned>(nl); ++n) {
                BigCount sum = 0;
                std::vector<unsigned> parts;
                std::function<void(unsigned)> split = [&](unsigned left) {
                  if (parts.size() + 1 == p) {
                    BigCount prod = fuss_catalan(left, p);
                    for (unsigned a : parts) prod *= fuss_catalan(a, p);
                    sum += prod;
                    return;
                  }
                  for (unsigned a = 0; a <= left; ++a) {
                    parts.push_back(a);
                    split(left - a);
                    parts.pop_back();
                  }
                };
                split(n - 1);
                if (sum != fuss_catalan(n, p)) return "p=" + std::to_string(p) + ", n=" + std::to_string(n);
              }
            return {};
          });
  const int mrec = std::max(0, s.n(12) / 2);
  s.check("p_132(2m) == Σ_{i+j+l=m−1} p_132(2i) p_231(2j) p_132(2l), and symmetrically, " + range("m", mrec),
          [&]() -> std::string {
            std::vector<BigCount> a, b;
            for (int m = 0; m <= mrec; ++m) {
              a.push_back(count_brute(query(2 * m, 2, 1, {Pattern::parse("132")})));
              b.push_back(count_brute(query(2 * m, 2, 1, {Pattern::parse("231")})));
            }
            for (int m = 1; m <= mrec; ++m) {
              BigCount sa = 0, sb = 0;
              for (int i = 0; i < m; ++i)
                for (int j = 0; i + j < m; ++j) {
                  const int l = m - 1 - i - j;
                  sa += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(l)];
                  sb += b[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(l)];
                }
              if (sa != a[static_cast<std::size_t>(m)] || sb != b[static_cast<std::size_t>(m)] || a[static_cast<std::size_t>(m)] != b[static_cast<std::size_t>(m)])
                return "m=" + std::to_string(m);
            }
            return {};
          });
  const int kb = s.k(5);
  const int nb = s.n(10);
  s.check("single-pattern formulas == oracle over MP(n,k,r), " + range("k", kb) + ", " + range("n", nb) + ", all r",
          [&]() -> std::string {
            for (int k = 1; k <= kb; ++k)
              for (int r = 1; r <= k; ++r)
                for (int n = 0; n <= nb; ++n)
                  for (const auto& sigma : length3_patterns()) {
                    BigCount formula;
                    try {
                      formula = mp_single_count(static_cast<unsigned>(n), static_cast<unsigned>(k), static_cast<unsigned>(r), sigma);
                    } catch (const UncoveredFormula&) {
                      continue;
                    }
                    if (formula != count_brute(query(n, k, r, {sigma}))) return at(n, k, r) + ", σ=" + sigma.word();
                  }
            return {};
          });
}

// ---------------------------------------------------------------- sef

void sef_suite(Suite& s) {
  const int nmax = s.n(8);
  s.check("perm_to_sef and sef_to_perm are inverse on S_n, " + range("n", nmax), [&]() -> std::string {
    for (int n = 0; n <= nmax; ++n)
      for (const auto& pi : all_permutations(n))
        if (sef_to_perm(perm_to_sef(pi)) != pi) return to_string(pi);
    return {};
  });
  const int kmax = s.k(4);
  s.check("π ∈ MP(n,k) iff f_π(i) ≡ i (mod k), 2≤k≤" + std::to_string(kmax) + ", " + range("n", nmax),
          [&]() -> std::string {
            for (int k = 2; k <= kmax; ++k)
              for (int n = 0; n <= nmax; ++n)
                for (const auto& pi : all_permutations(n)) {
                  const auto f = perm_to_sef(pi);
                  bool congruent = true;
                  for (std::size_t i = 1; i <= f.size(); ++i)
                    congruent = congruent && (f(i) - static_cast<int>(i)) % k == 0;
                  if (congruent != is_mod_k_alternating(pi, k)) return to_string(pi) + ", k=" + std::to_string(k);
                }
            return {};
          });
  const int nc = s.n(16);
  s.check("|generate_mp_c(n,k)| == count_mp_c_closed, " + range("k", kmax) + ", " + range("n", nc), [&]() -> std::string {
    for (int k = 1; k <= kmax; ++k)
      for (int n = 0; n <= (k == 1 ? std::min(nc, 14) : nc); ++n) {
        BigCount seen = 0;
        for (const auto& w : generate_mp_c(n, k)) {
          (void)w;
          ++seen;
        }
        if (seen != count_mp_c_closed(static_cast<unsigned>(n), static_cast<unsigned>(k))) return at(n, k);
      }
    return {};
  });
  const int nr = s.n(14);
  s.check("|MP_C(n+1,k)| == Σ_{k|j} |MP_C(j,k)| |MP_C(n−j,k)| from generation, 2≤k≤" + std::to_string(kmax) + ", " +
              range("n", nr),
          [&]() -> std::string {
            for (int k = 2; k <= kmax; ++k) {
              std::vector<BigCount> r;
              for (int n = 0; n <= nr + 1; ++n) {
                BigCount c = 0;
                for (const auto& w : generate_mp_c(n, k)) {
                  (void)w;
                  ++c;
                }
                r.push_back(c);
              }
              for (int n = 0; n <= nr; ++n) {
                BigCount sum = 0;
                for (int j = 0; j <= n; j += k) sum += r[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(n - j)];
                if (sum != r[static_cast<std::size_t>(n + 1)]) return at(n, k);
              }
            }
            return {};
          });
  const int nd = s.n(10);
  s.check("Dyck images of MP_C(n,k) are exactly L^k_n, " + range("k", kmax) + ", " + range("n", nd), [&]() -> std::string {
    for (int n = 0; n <= nd; ++n) {
      // Every Dyck path of semilength n, via its area sequence.
      std::vector<DyckPath> paths;
      std::vector<int> a;
      std::function<void()> grow = [&] {
        if (static_cast<int>(a.size()) == n) {
          paths.push_back(area_to_dyck(AreaSequence(a)));
          return;
        }
        const int cap = a.empty() ? 0 : a.back() + 1;
        for (int v = 0; v <= cap; ++v) {
          a.push_back(v);
          grow();
          a.pop_back();
        }
      };
      grow();
      for (int k = 1; k <= kmax; ++k) {
        std::vector<std::string> in_lk, images;
        for (const auto& p : paths)
          if (is_in_L_k(p, k)) in_lk.push_back(p.str());
        for (const auto& w : generate_mp_c(n, k)) images.push_back(catalan_word_to_dyck(w).str());
        std::sort(in_lk.begin(), in_lk.end());
        std::sort(images.begin(), images.end());
        if (in_lk != images) return at(n, k);
      }
    }
    return {};
  });
  s.check("Catalan word → area → Dyck path round trips, " + range("n", nd), [&]() -> std::string {
    for (int n = 0; n <= nd; ++n)
      for (const auto& w : generate_mp_c(n, 1)) {
        const auto p = catalan_word_to_dyck(w);
        if (dyck_to_catalan_word(p) != w || dyck_to_area(p) != catalan_word_to_area(w)) return to_string(w);
      }
    return {};
  });
}

// ---------------------------------------------------------------- series

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

PuiseuxSeries random_series(std::mt19937& rng, long den, long low_key, long order_key) {
  PuiseuxSeries f = PuiseuxSeries::zero(Rational(order_key, den));
  for (long key = low_key; key < order_key; ++key) f = f + PuiseuxSeries::monomial(random_rational(rng), Rational(key, den));
  return f;
}

void series_suite(Suite& s) {
  const int order = s.n(12);
  const int pmax = s.k(5);
  s.check("solve_fuss_series coefficients == Fuss–Catalan, p≤" + std::to_string(pmax) + ", order " + std::to_string(order),
          [&]() -> std::string {
            for (unsigned p = 1; p <= static_cast<unsigned>(pmax); ++p) {
              const auto f = solve_fuss_series(p, order);
              for (long m = 0; m < order; ++m)
                if (f.coefficient(m) != Rational(fuss_catalan(static_cast<unsigned>(m), p)))
                  return "p=" + std::to_string(p) + ", m=" + std::to_string(m);
            }
            return {};
          });
  const int kmax = s.k(4);
  const int fe_order = s.n(10);
  s.check("B_{k,j} == A_k^(j+1) and A_k == 1 + t A_k^(k+1), " + range("k", kmax) + ", j≤k, order " +
              std::to_string(fe_order),
          [&]() -> std::string {
            for (unsigned k = 1; k <= static_cast<unsigned>(kmax); ++k)
              for (unsigned j = 0; j <= k; ++j)
                if (!check_functional_equations(k, j, fe_order)) return "k=" + std::to_string(k) + ", j=" + std::to_string(j);
            return {};
          });
  const int lo = s.n(8);
  s.check("F(s)|_{s^r} == (1/r) φ(x)^r|_{x^(r−1)}, (k,j) ∈ {(2,0),(2,1),(3,1),(3,2),(4,3)}, order " + std::to_string(lo),
          [&]() -> std::string {
            for (auto [k, j] : {std::pair{2u, 0u}, {2u, 1u}, {3u, 1u}, {3u, 2u}, {4u, 3u}}) {
              const auto report = lagrange_check(k, j, lo);
              if (!report.passed || report.checked == 0)
                return "k=" + std::to_string(k) + ", j=" + std::to_string(j) + " at r=" +
                       (report.first_failure ? to_string(*report.first_failure) : std::string("-"));
            }
            return {};
          });
  s.check("perturbed B_{k,j} fails the Lagrange comparison, (k,j) ∈ {(2,0),(3,1)}", [&]() -> std::string {
    for (auto [k, j] : {std::pair{2u, 0u}, {3u, 1u}}) {
      auto b = build_A_B(k, j, 6).second + PuiseuxSeries::monomial(1, 1);
      if (lagrange_check(k, j, lo, b).passed) return "k=" + std::to_string(k) + ", j=" + std::to_string(j);
    }
    return {};
  });

  std::mt19937 rng(20240601);
  s.check("residue of a derivative vanishes, 100 random Laurent series, d≤4", [&]() -> std::string {
    std::uniform_int_distribution<long> den(1, 4), low(-3, 0), len(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
      const long d = den(rng);
      const long lk = low(rng) * d - len(rng);
      const auto h = random_series(rng, d, lk, d * len(rng));
      if (derivative(h).coefficient(-1) != 0) return h.render();
    }
    return {};
  });
  s.check("f^j f' has residue [j = −1] for f = ax + …, j ∈ −3..2, 20 random f", [&]() -> std::string {
    std::uniform_int_distribution<long> den(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
      const long d = den(rng);
      Rational a = random_rational(rng);
      if (a == 0) a = 1;
      const auto tail = random_series(rng, d, d + 1, 5 * d);
      const auto f = PuiseuxSeries::monomial(a, 1) + tail;
      const auto fp = derivative(f);
      for (long j = -3; j <= 2; ++j) {
        const Rational want = j == -1 ? 1 : 0;
        if ((pow_rational(f, j) * fp).coefficient(-1) != want) return f.render() + ", j=" + std::to_string(j);
      }
    }
    return {};
  });
  s.check("ring laws on 50 random truncated series, d≤3", [&]() -> std::string {
    std::uniform_int_distribution<long> den(1, 3), low(-2, 1), len(2, 6);
    auto pick = [&] {
      const long d = den(rng);
      const long lk = low(rng) * d;
      return random_series(rng, d, lk, lk + len(rng) * d);
    };
    for (int trial = 0; trial < 50; ++trial) {
      const auto f = pick(), g = pick(), h = pick();
      if (!agree(f + g, g + f) || !agree(f * g, g * f) || !agree((f + g) + h, f + (g + h)) ||
          !agree((f * g) * h, f * (g * h)) || !agree(f * (g + h), f * g + f * h))
        return f.render() + " | " + g.render() + " | " + h.render();
    }
    return {};
  });
  s.check("pow_rational(pow_rational(f, r), 1/r) == f for f = 1 + x + x², r ∈ {2, 3, 1/2, 3/2}", [&]() -> std::string {
    const auto f = PuiseuxSeries::from_coefficients({1, 1, 1}, 10);
    for (const Rational& r : {Rational(2), Rational(3), Rational(1, 2), Rational(3, 2)}) {
      const auto back = pow_rational(pow_rational(f, r), 1 / r);
      if (!agree(back, f)) return "r=" + to_string(r) + ": " + back.render();
    }
    return {};
  });
}

// ---------------------------------------------------------------- table2

std::vector<int> case_a_witness(int n, int k) {
  const int m = n / k;
  const int l = n % k;
  std::vector<int> w;
  for (int i = 1; i <= l; ++i) w.push_back(k * m + i);
  for (int j = m; j >= 1; --j) {
    const int b = k * (j - 1);
    if (k == 3 && l == 1) w.insert(w.end(), {b + 2, b + 3, b + 1});
    if (k == 3 && l == 2) w.insert(w.end(), {b + 3, b + 1, b + 2});
    if (k == 4 && l == 2) w.insert(w.end(), {b + 3, b + 4, b + 1, b + 2});
  }
  return w;
}

void table2_suite(Suite& s) {
  const int nmax = s.n(12);
  const auto& p = length3_patterns();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const char letter = pair_case(p[i], p[j]);
      s.check("pair {" + p[i].word() + "," + p[j].word() + "} (case " + std::string(1, letter) +
                  ") == oracle, k=2, 1≤n≤" + std::to_string(nmax),
              [&, i, j]() -> std::string {
                for (int n = 1; n <= nmax; ++n) {
                  const auto res = pair_count(static_cast<unsigned>(n), 2, p[i], p[j]);
                  const auto oracle = count_brute(query(n, 2, 1, {p[i], p[j]}));
                  if (res.value != oracle) return "n=" + std::to_string(n) + ": " + to_string(res.value) + " vs " + to_string(oracle);
                }
                return {};
              });
    }

  struct Spot {
    const char* a;
    const char* b;
    unsigned n;
    BigCount value;
    const char* name;
  };
  for (const auto& spot : {Spot{"213", "132", 11, 89, "F_11"}, Spot{"312", "231", 12, 144, "F_12"},
                           Spot{"321", "132", 12, 16, "C(6,2)+1"}}) {
    s.check(std::string("p_{") + spot.a + "," + spot.b + "}(" + std::to_string(spot.n) + ") == " + spot.name + " = " +
                to_string(spot.value) + ", k=2",
            [&]() -> std::string {
              const auto sa = Pattern::parse(spot.a), sb = Pattern::parse(spot.b);
              const auto res = pair_count(spot.n, 2, sa, sb);
              const auto oracle = count_brute(query(static_cast<int>(spot.n), 2, 1, {sa, sb}));
              if (res.value != spot.value || oracle != spot.value) return to_string(res.value) + " / " + to_string(oracle);
              return {};
            });
  }

  const int kmax = s.k(4);
  const Pattern p123 = Pattern::parse("123"), p132 = Pattern::parse("132"), p213 = Pattern::parse("213"),
                p321 = Pattern::parse("321");
  s.check("case A: exactly the witness permutation for (k,l) ∈ {(3,1),(3,2),(4,2)}, " + range("n", nmax),
          [&]() -> std::string {
            for (int n = 3; n <= nmax; ++n)
              for (int k : {3, 4}) {
                const int l = n % k;
                if (!((k == 3 && (l == 1 || l == 2)) || (k == 4 && l == 2))) continue;
                for (const auto& tau : {p132, p213}) {
                  auto found = generate_all(query(n, k, 1, {p123, tau}));
                  std::vector<Permutation> want{Permutation(case_a_witness(n, k))};
                  if (tau == p213) want = {revflip(want[0])};
                  if (found != want || pair_count(static_cast<unsigned>(n), static_cast<unsigned>(k), p123, tau).value != 1)
                    return at(n, k) + ", τ=" + tau.word();
                }
              }
            return {};
          });
  s.check("case D == 2^(m−1) or F_(2m+1) by oracle, 3≤k≤" + std::to_string(kmax) + ", " + range("n", nmax),
          [&]() -> std::string {
            for (int k = 3; k <= kmax; ++k)
              for (int n = 1; n <= nmax; ++n) {
                const unsigned m = static_cast<unsigned>(n / k);
                const BigCount want = n % k == 0 ? power(2, m - 1) : fibonacci(2 * m + 1);
                if (pair_count(static_cast<unsigned>(n), static_cast<unsigned>(k), p132, p213).value != want ||
                    count_brute(query(n, k, 1, {p132, p213})) != want)
                  return at(n, k);
              }
            return {};
          });
  s.check("case G == C(m,2)+1 by oracle, 3≤k≤" + std::to_string(kmax) + ", " + range("n", nmax), [&]() -> std::string {
    for (int k = 3; k <= kmax; ++k)
      for (int n = 1; n <= nmax; ++n) {
        const BigCount want = binomial(static_cast<unsigned long>(n / k), 2) + 1;
        for (const auto& tau : {p132, p213})
          if (pair_count(static_cast<unsigned>(n), static_cast<unsigned>(k), tau, p321).value != want ||
              count_brute(query(n, k, 1, {tau, p321})) != want)
            return at(n, k) + ", τ=" + tau.word();
      }
    return {};
  });
  const int nother = s.n(10);
  s.check("every pair == oracle, k ∈ {1,3,4}, " + range("n", nother), [&]() -> std::string {
    for (int k : {1, 3, 4})
      for (int n = 0; n <= nother; ++n)
        for (std::size_t i = 0; i < p.size(); ++i)
          for (std::size_t j = i + 1; j < p.size(); ++j)
            if (pair_count(static_cast<unsigned>(n), static_cast<unsigned>(k), p[i], p[j]).value !=
                count_brute(query(n, k, 1, {p[i], p[j]})))
              return at(n, k) + ", {" + p[i].word() + "," + p[j].word() + "}";
    return {};
  });
}

// ---------------------------------------------------------------- remarks

void remarks_suite(Suite& s) {
  const int nmax = std::min(s.n(14), 14);
  const std::vector<long> printed123{1, 1, 1, 3, 3, 10, 11, 37, 44, 146, 185, 603, 808, 2576};
  const std::vector<long> printed321{1, 1, 1, 2, 3, 6, 11, 22, 44, 89, 185, 382, 808, 1702};
  auto compare = [nmax](const char* word, const std::vector<long>& printed) -> std::string {
    const auto seq = remark_sequence(Pattern::parse(word), nmax);
    for (int n = 1; n <= nmax; ++n) {
      const auto i = static_cast<std::size_t>(n - 1);
      if (seq[i] != printed[i]) return "n=" + std::to_string(n) + ": " + to_string(seq[i]);
    }
    return {};
  };
  s.check("123-avoiding PAPs == 1, 1, 1, 3, 3, 10, …, 2576, " + range("n", nmax),
          [&] { return compare("123", printed123); });
  s.check("321-avoiding PAPs == 1, 1, 1, 2, 3, 6, …, 1702, " + range("n", nmax),
          [&] { return compare("321", printed321); });
  s.check("p_123(2m+1) == p_321(2m+1), " + range("n", nmax), [&]() -> std::string {
    const auto a = remark_sequence(Pattern::parse("123"), nmax);
    const auto b = remark_sequence(Pattern::parse("321"), nmax);
    for (int n = 1; n <= nmax; n += 2)
      if (a[static_cast<std::size_t>(n - 1)] != b[static_cast<std::size_t>(n - 1)]) return "n=" + std::to_string(n);
    return {};
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"core", "modk", "counting", "sef", "series", "table2", "remarks", "all"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view name, const VerifyConfig& config) {
  static const std::vector<std::pair<std::string_view, void (*)(Suite&)>> suites{
      {"core", core_suite},     {"modk", modk_suite},     {"counting", counting_suite}, {"sef", sef_suite},
      {"series", series_suite}, {"table2", table2_suite}, {"remarks", remarks_suite},
  };
  Suite s(config);
  bool matched = false;
  for (const auto& [suite, fn] : suites) {
    if (name == "all" || name == suite) {
      fn(s);
      matched = true;
    }
  }
  if (!matched) throw std::invalid_argument("unknown suite: " + std::string(name));
  return s.take();
}

std::string format_check(const CheckResult& result) {
  if (result.passed) return result.label + ": PASS";
  return result.label + ": FAIL (" + result.detail + ")";
}

}  // namespace modkperm
