#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modkperm/bigcount.hpp"
#include "modkperm/permutation.hpp"

namespace modkperm {

/// A word f_1..f_n with 1 <= f_i <= i.
class SubexcedantFunction {
 public:
  SubexcedantFunction() = default;
  SubexcedantFunction(std::initializer_list<int> values);
  /// Throws std::invalid_argument unless 1 <= values[i-1] <= i for all i.
  explicit SubexcedantFunction(std::vector<int> values);

  std::size_t size() const noexcept { return values_.size(); }
  /// f(i) for 1 <= i <= n.
  int operator()(std::size_t i) const { return values_[i - 1]; }
  std::span<const int> values() const noexcept { return values_; }

  /// w_1 = 1 and w_i <= w_{i-1} + 1.
  bool is_catalan() const noexcept;

  friend bool operator==(const SubexcedantFunction&, const SubexcedantFunction&) = default;

 private:
  std::vector<int> values_;
};

/// A subexcedant function that is also a Catalan word.
class CatalanWord {
 public:
  CatalanWord() = default;
  CatalanWord(std::initializer_list<int> values);
  /// Throws std::invalid_argument unless w_1 = 1 and 1 <= w_i <= w_{i-1} + 1.
  explicit CatalanWord(std::vector<int> values);

  std::size_t size() const noexcept { return word_.size(); }
  int operator()(std::size_t i) const { return word_(i); }
  std::span<const int> values() const noexcept { return word_.values(); }
  const SubexcedantFunction& as_sef() const noexcept { return word_; }

  friend bool operator==(const CatalanWord&, const CatalanWord&) = default;

 private:
  SubexcedantFunction word_;
};

/// a_1 = 0 and 0 <= a_i <= a_{i-1} + 1.
class AreaSequence {
 public:
  AreaSequence() = default;
  AreaSequence(std::initializer_list<int> values);
  explicit AreaSequence(std::vector<int> values);

  std::size_t size() const noexcept { return values_.size(); }
  int operator()(std::size_t i) const { return values_[i - 1]; }
  std::span<const int> values() const noexcept { return values_; }

  friend bool operator==(const AreaSequence&, const AreaSequence&) = default;

 private:
  std::vector<int> values_;
};

/// North/east lattice path from (0,0) to (n,n) that never dips below y = x.
/// Serialized over the alphabet {n, e}, e.g. "nnennneneeneee".
class DyckPath {
 public:
  DyckPath() = default;
  /// Throws std::invalid_argument on an unknown letter, unequal step counts or
  /// a prefix with more east than north steps.
  explicit DyckPath(std::string_view steps);

  /// Semilength n.
  std::size_t size() const noexcept { return steps_.size() / 2; }
  const std::string& str() const noexcept { return steps_; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

/// (n f(n)) ... (2 f(2)) (1 f(1)), composed as functions (rightmost first).
Permutation sef_to_perm(const SubexcedantFunction& f);

/// Inverse of sef_to_perm: f(n) = pi(n), then peel the transposition
/// (n pi(n)) off and continue on the fixed-n permutation of length n-1.
SubexcedantFunction perm_to_sef(const Permutation& pi);

AreaSequence catalan_word_to_area(const CatalanWord& w);
CatalanWord area_to_catalan_word(const AreaSequence& a);

/// Row i (bottom-up) has a_i full boxes between the path and the diagonal.
DyckPath area_to_dyck(const AreaSequence& a);
AreaSequence dyck_to_area(const DyckPath& p);

DyckPath catalan_word_to_dyck(const CatalanWord& w);
CatalanWord dyck_to_catalan_word(const DyckPath& p);

/// Boxes in row i that lie above the diagonal but left of the path:
/// (i-1) - a_i = i - w_i.
std::vector<int> row_box_counts(const DyckPath& p);

/// L^k_n membership: every row box count is a multiple of k.
bool is_in_L_k(const DyckPath& p, int k);

/// Lexicographic stream of Catalan words of length n with w_i == i (mod k).
/// These are the subexcedant functions of MP_C(n, k).
class CatalanWordStream {
 public:
  CatalanWordStream(int n, int k);

  std::optional<CatalanWord> next();

  class iterator {
   public:
    using value_type = CatalanWord;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(CatalanWordStream* s) : stream_(s) { ++*this; }
    const CatalanWord& operator*() const { return *current_; }
    const CatalanWord* operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      if (!current_) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return stream_ == nullptr; }

   private:
    CatalanWordStream* stream_ = nullptr;
    std::optional<CatalanWord> current_;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int lowest(std::size_t pos) const;

  int n_;
  int k_;
  std::vector<int> word_;
  std::vector<int> cursor_;
  bool started_ = false;
  bool done_ = false;
};

CatalanWordStream generate_mp_c(int n, int k);
std::vector<CatalanWord> generate_mp_c_all(int n, int k);

/// |MP_C(n, k)|, which equals a_k(n).
BigCount count_mp_c_closed(unsigned n, unsigned k);

/// Comma-separated decimals; a bare digit run is read digit-wise (n <= 9 only).
SubexcedantFunction parse_sef(std::string_view text);
std::string to_string(const SubexcedantFunction& f);
std::string to_string(const CatalanWord& w);
std::string to_string(const AreaSequence& a);

}  // namespace modkperm
