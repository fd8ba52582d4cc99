#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "modkperm/bigcount.hpp"
#include "modkperm/permutation.hpp"

namespace modkperm {

/// MP(n, k, r): permutations with pi(i) == r + i - 1 (mod k). The remainder r
/// lives in {1, ..., k}; r = 1 is the plain MP(n, k) family and k = 1 imposes
/// no restriction at all.
struct ModKClass {
  int n = 0;
  int k = 1;
  int r = 1;

  /// Throws std::invalid_argument unless n >= 0, k >= 1 and 1 <= r <= k.
  void validate() const;
  /// Remainder class (in {0, ..., k-1}) required at 1-based position i.
  int residue_at(int i) const { return ((r + i - 1) % k + k) % k; }
};

struct AvoidanceQuery {
  ModKClass cls;
  std::vector<Pattern> forbidden;

  /// Validates the class and requires pairwise-distinct patterns.
  void validate() const;
};

/// 2 - r reduced into {1, ..., k}. revflip maps MP_sigma(n,k,r) onto
/// MP_revflip(sigma)(n,k,revflip_remainder(r,k)).
int revflip_remainder(int r, int k);

bool is_mod_k_alternating(const Permutation& pi, int k, int r = 1);

/// Lexicographic stream over the permutations of a query. Backtracking places
/// only values of the right residue and rejects a value as soon as it
/// completes a forbidden pattern with the current prefix.
class ModKStream {
 public:
  explicit ModKStream(AvoidanceQuery query);

  /// Next permutation, or nullopt once the stream is exhausted.
  std::optional<Permutation> next();

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(ModKStream* s) : stream_(s) { ++*this; }
    const Permutation& operator*() const { return *current_; }
    const Permutation* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      if (!current_) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return stream_ == nullptr; }

   private:
    ModKStream* stream_ = nullptr;
    std::optional<Permutation> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  bool admissible(int value) const;
  int first_candidate(int depth) const;

  AvoidanceQuery query_;
  std::vector<int> prefix_;
  std::vector<int> cursor_;
  std::vector<bool> used_;
  bool started_ = false;
  bool done_ = false;
};

ModKStream generate(const AvoidanceQuery& query);
std::vector<Permutation> generate_all(const AvoidanceQuery& query);

struct CountOptions {
  /// Number of threads splitting the first level of the search tree; 0 picks
  /// std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned workers = 1;
};

/// |generate(query)| without materializing the permutations.
BigCount count_brute(const AvoidanceQuery& query, CountOptions options = {});

/// |MP(n,k)| = (ceil(n/k)!)^j (floor(n/k)!)^(k-j) with j = n mod k.
BigCount count_mp(int n, int k);
/// |MP(n,k,r)|: zero unless r = 1 or k | n, in which case ((n/k)!)^k.
BigCount count_mp(int n, int k, int r);

/// Values that exceed everything to their left, increasing.
std::vector<int> left_to_right_maxima(const Permutation& pi);
/// The values that are not left-to-right maxima, increasing.
std::vector<int> hole_values(const Permutation& pi);

/// Structure of non-identity 321-avoiding parity-alternating permutations:
/// (1) two consecutive integers h, h+1 are both hole values, and (2) for the
/// highest such pair, h+1 sits right of h and the entries strictly between
/// them are either absent or an even-length run of left-to-right maxima with
/// consecutive values. Throws std::invalid_argument when pi is the identity,
/// is not parity-alternating (k = 2, r = 1) or contains 321.
bool check_321_pap_structure(const Permutation& pi);

/// p_pattern(n) for n = 1..n_max over MP(n, 2, 1). `pattern` must be 123 or 321.
std::vector<BigCount> remark_sequence(const Pattern& pattern, int n_max, CountOptions options = {});

}  // namespace modkperm
