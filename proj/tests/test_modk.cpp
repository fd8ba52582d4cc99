#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "modkperm/modk.hpp"

using namespace modkperm;

namespace {

// Filters all of S_n; shares nothing with the backtracking generator.
std::vector<Permutation> filter_oracle(int n, int k, int r, const std::vector<Pattern>& forbidden) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    bool keep = true;
    for (int i = 1; i <= n && keep; ++i) keep = ((v[static_cast<std::size_t>(i - 1)] - (r + i - 1)) % k + k) % k == 0;
    for (const auto& sigma : forbidden) keep = keep && !contains_pattern(std::span<const int>(v), sigma);
    if (keep) out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

AvoidanceQuery q(int n, int k, int r = 1, std::vector<Pattern> forbidden = {}) { return {{n, k, r}, std::move(forbidden)}; }

Pattern P(const char* w) { return Pattern::parse(w); }

}  // namespace

TEST_CASE("is_mod_k_alternating") {
  CHECK(is_mod_k_alternating(Permutation{5, 2, 7, 8, 1, 6, 3, 4}, 4, 1));
  for (int n = 0; n <= 6; ++n)
    for (int k = 1; k <= 4; ++k) CHECK(is_mod_k_alternating(Permutation::identity(n), k, 1));
  CHECK_FALSE(is_mod_k_alternating(Permutation{2, 1}, 2, 1));
  CHECK(is_mod_k_alternating(Permutation{2, 3, 1}, 3, 2));
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(q(-1, 2).validate(), std::invalid_argument);
  CHECK_THROWS_AS(q(3, 0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(q(3, 2, 3).validate(), std::invalid_argument);
  CHECK_THROWS_AS(q(3, 2, 1, {P("132"), P("132")}).validate(), std::invalid_argument);
  CHECK(revflip_remainder(1, 3) == 1);
  CHECK(revflip_remainder(2, 3) == 3);
  CHECK(revflip_remainder(3, 3) == 2);
  CHECK(revflip_remainder(1, 1) == 1);
}

TEST_CASE("generate MP(7,3)") {
  const auto all = generate_all(q(7, 3));
  REQUIRE(all.size() == 24);
  CHECK(all.front() == Permutation{1, 2, 3, 4, 5, 6, 7});
  CHECK(all.back() == Permutation{7, 5, 6, 4, 2, 3, 1});
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(generate_all(q(3, 3, 2)) == std::vector<Permutation>{Permutation{2, 3, 1}});
  CHECK(generate_all(q(0, 2)) == std::vector<Permutation>{Permutation()});
  CHECK(generate_all(q(0, 5, 3, {P("123")})) == std::vector<Permutation>{Permutation()});
}

TEST_CASE("stream is lazy and restartable per instance") {
  ModKStream s(q(12, 1));
  auto first = s.next();
  REQUIRE(first);
  CHECK(*first == Permutation::identity(12));
  CHECK(*s.next() == Permutation{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 11});
}

TEST_CASE("count_brute examples") {
  CHECK(count_brute(q(7, 3)) == 24);
  CHECK(count_brute(q(5, 2, 1, {P("132")})) == 7);
  CHECK(count_brute(q(4, 2, 1, {P("132")})) == 3);
  CHECK(generate_all(q(4, 2, 1, {P("132")})) ==
        std::vector<Permutation>{Permutation{1, 2, 3, 4}, Permutation{3, 2, 1, 4}, Permutation{3, 4, 1, 2}});
  CHECK(count_brute(q(9, 2, 1, {P("132")}), {0}) == count_brute(q(9, 2, 1, {P("132")})));
}

TEST_CASE("generation matches the filter oracle, n <= 7") {
  const auto& pats = length3_patterns();
  for (int n = 0; n <= 7; ++n)
    for (int k = 1; k <= 4; ++k)
      for (int r = 1; r <= k; ++r) {
        CHECK(generate_all(q(n, k, r)) == filter_oracle(n, k, r, {}));
        for (std::size_t i = 0; i < pats.size(); ++i) {
          CHECK(generate_all(q(n, k, r, {pats[i]})) == filter_oracle(n, k, r, {pats[i]}));
          for (std::size_t j = i + 1; j < pats.size(); ++j) {
            const auto want = filter_oracle(n, k, r, {pats[i], pats[j]});
            CHECK(generate_all(q(n, k, r, {pats[i], pats[j]})) == want);
            CHECK(count_brute(q(n, k, r, {pats[i], pats[j]}), {3}) == static_cast<unsigned long>(want.size()));
          }
        }
      }
}

TEST_CASE("count_mp") {
  CHECK(count_mp(7, 3) == 24);
  CHECK(count_mp(6, 3) == 8);
  for (int n = 0; n <= 10; ++n) CHECK(count_mp(n, 1) == factorial(static_cast<unsigned long>(n)));
  CHECK(count_mp(7, 3, 2) == 0);
  CHECK(count_mp(6, 3, 2) == 8);
  for (int k = 1; k <= 5; ++k)
    for (int n = 0; n <= 9; ++n) CHECK(count_mp(n, k) == count_brute(q(n, k)));
}

TEST_CASE("revflip and inverse act on the classes") {
  for (int k = 1; k <= 4; ++k)
    for (int r = 1; r <= k; ++r)
      for (int n = 0; n <= 9; ++n)
        for (const auto& sigma : length3_patterns()) {
          std::set<Permutation> image;
          for (const auto& pi : generate(q(n, k, r, {sigma}))) image.insert(revflip(pi));
          const auto target = generate_all(q(n, k, revflip_remainder(r, k), {revflip(sigma)}));
          CHECK(std::vector<Permutation>(image.begin(), image.end()) == target);
          if (r == 1) {
            std::set<Permutation> inv;
            for (const auto& pi : generate(q(n, k, 1, {sigma}))) inv.insert(inverse(pi));
            CHECK(std::vector<Permutation>(inv.begin(), inv.end()) == generate_all(q(n, k, 1, {inverse(sigma)})));
          }
        }
}

TEST_CASE("left-to-right maxima and hole values") {
  CHECK(left_to_right_maxima(Permutation::identity(4)) == std::vector<int>{1, 2, 3, 4});
  CHECK(hole_values(Permutation::identity(4)).empty());
  CHECK(left_to_right_maxima(Permutation{2, 1, 4, 3}) == std::vector<int>{2, 4});
  CHECK(hole_values(Permutation{2, 1, 4, 3}) == std::vector<int>{1, 3});
  CHECK(left_to_right_maxima(Permutation{1, 8, 5, 3, 7, 4, 6, 2}) == std::vector<int>{1, 8});
  CHECK(hole_values(Permutation{1, 8, 5, 3, 7, 4, 6, 2}) == std::vector<int>{2, 3, 4, 5, 6, 7});
}

TEST_CASE("321-avoiding PAP structure") {
  CHECK_THROWS_AS(check_321_pap_structure(Permutation{3, 2, 1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(check_321_pap_structure(Permutation::identity(4)), std::invalid_argument);
  CHECK(check_321_pap_structure(Permutation{3, 4, 1, 2}));
  int checked = 0;
  for (int n = 1; n <= 10; ++n)
    for (const auto& pi : generate(q(n, 2, 1, {P("321")}))) {
      if (pi.is_identity()) continue;
      CHECK(check_321_pap_structure(pi));
      ++checked;
    }
  CHECK(checked > 100);
}

TEST_CASE("remark sequences") {
  const auto a = remark_sequence(P("123"), 8);
  const auto b = remark_sequence(P("321"), 8);
  CHECK(a == std::vector<BigCount>{1, 1, 1, 3, 3, 10, 11, 37});
  CHECK(b == std::vector<BigCount>{1, 1, 1, 2, 3, 6, 11, 22});
  for (std::size_t i = 0; i < a.size(); i += 2) CHECK(a[i] == b[i]);
  CHECK_THROWS_AS(remark_sequence(P("132"), 4), std::invalid_argument);
}
