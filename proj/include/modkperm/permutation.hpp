#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modkperm {

/// A permutation of {1, ..., n} in one-line notation. Values are 1-based.
/// The empty permutation (n = 0) is valid.
class Permutation {
 public:
  using value_type = int;

  Permutation() = default;
  Permutation(std::initializer_list<int> entries);
  /// Throws std::invalid_argument unless `entries` is a bijection on [n].
  explicit Permutation(std::vector<int> entries);

  /// Skips validation. Callers guarantee the bijection invariant.
  static Permutation from_trusted(std::vector<int> entries);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool is_identity() const noexcept;

  /// pi(i) for 1 <= i <= n.
  int operator()(std::size_t i) const { return entries_[i - 1]; }

  std::span<const int> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  struct trusted_tag {};
  Permutation(std::vector<int> entries, trusted_tag) : entries_(std::move(entries)) {}

  std::vector<int> entries_;
};

/// A permutation used as a pattern; length at least 1.
class Pattern {
 public:
  explicit Pattern(Permutation shape);
  /// Parses the bare word notation, e.g. "132".
  static Pattern parse(std::string_view word);

  const Permutation& shape() const noexcept { return shape_; }
  std::size_t size() const noexcept { return shape_.size(); }
  std::string word() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) { return a.shape_ <=> b.shape_; }

 private:
  Permutation shape_;
};

/// The six patterns of length 3, in the order 123, 132, 213, 231, 312, 321.
const std::vector<Pattern>& length3_patterns();

bool is_bijection(std::span<const int> entries);

Permutation reverse(const Permutation& pi);
Permutation flip(const Permutation& pi);
/// flip(reverse(pi)).
Permutation revflip(const Permutation& pi);
Permutation inverse(const Permutation& pi);
Pattern reverse(const Pattern& sigma);
Pattern revflip(const Pattern& sigma);
Pattern inverse(const Pattern& sigma);

/// (pi o omega)(k) = pi(omega(k)). Throws std::invalid_argument on length mismatch.
Permutation compose(const Permutation& pi, const Permutation& omega);

/// Replaces entries by their ranks. Throws std::invalid_argument on duplicates.
Permutation standardize(std::span<const int> word);

/// True iff some subsequence of `word` is order-isomorphic to `sigma`.
/// `word` must have distinct entries. Linear time for patterns of length 3.
bool contains_pattern(std::span<const int> word, const Pattern& sigma);
inline bool contains_pattern(const Permutation& pi, const Pattern& sigma) {
  return contains_pattern(pi.entries(), sigma);
}

/// True iff appending `last` to `prefix` creates an occurrence of `sigma`
/// that ends at `last`. Linear time for patterns of length 3.
bool completes_pattern(std::span<const int> prefix, int last, const Pattern& sigma);

/// "[5,2,7,8,1,6,3,4]"
std::string to_string(const Permutation& pi);
/// Accepts "[5,2,7]", "5,2,7" and, when no separator is present, digit-wise "527".
Permutation parse_permutation(std::string_view text);

}  // namespace modkperm
