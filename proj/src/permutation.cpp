#include "modkperm/permutation.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "modkperm/text.hpp"

namespace modkperm {

bool is_bijection(std::span<const int> entries) {
  const auto n = static_cast<int>(entries.size());
  std::vector<bool> seen(entries.size() + 1, false);
  for (int v : entries) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries)) {}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  if (!is_bijection(entries_)) {
    throw std::invalid_argument("not a permutation: [" + join(entries_) + "]");
  }
}

Permutation Permutation::from_trusted(std::vector<int> entries) {
  return Permutation(std::move(entries), trusted_tag{});
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return from_trusted(std::move(e));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

Pattern::Pattern(Permutation shape) : shape_(std::move(shape)) {
  if (shape_.empty()) throw std::invalid_argument("a pattern must have length at least 1");
}

Pattern Pattern::parse(std::string_view word) {
  return Pattern(Permutation(parse_int_list(word)));
}

std::string Pattern::word() const {
  std::string s;
  if (size() > 9) return join(shape_.entries());
  for (int v : shape_) s += static_cast<char>('0' + v);
  return s;
}

const std::vector<Pattern>& length3_patterns() {
  static const std::vector<Pattern> all = {
      Pattern({1, 2, 3}), Pattern({1, 3, 2}), Pattern({2, 1, 3}),
      Pattern({2, 3, 1}), Pattern({3, 1, 2}), Pattern({3, 2, 1})};
  return all;
}

Permutation reverse(const Permutation& pi) {
  std::vector<int> e(pi.begin(), pi.end());
  std::reverse(e.begin(), e.end());
  return Permutation::from_trusted(std::move(e));
}

Permutation flip(const Permutation& pi) {
  const int n1 = static_cast<int>(pi.size()) + 1;
  std::vector<int> e;
  e.reserve(pi.size());
  for (int v : pi) e.push_back(n1 - v);
  return Permutation::from_trusted(std::move(e));
}

Permutation revflip(const Permutation& pi) { return flip(reverse(pi)); }

Permutation inverse(const Permutation& pi) {
  std::vector<int> e(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) e[pi.entries()[i] - 1] = static_cast<int>(i + 1);
  return Permutation::from_trusted(std::move(e));
}

Pattern reverse(const Pattern& sigma) { return Pattern(reverse(sigma.shape())); }
Pattern revflip(const Pattern& sigma) { return Pattern(revflip(sigma.shape())); }
Pattern inverse(const Pattern& sigma) { return Pattern(inverse(sigma.shape())); }

Permutation compose(const Permutation& pi, const Permutation& omega) {
  if (pi.size() != omega.size()) {
    throw std::invalid_argument("compose: length mismatch " + std::to_string(pi.size()) +
                                " vs " + std::to_string(omega.size()));
  }
  std::vector<int> e;
  e.reserve(pi.size());
  for (int w : omega) e.push_back(pi(w));
  return Permutation::from_trusted(std::move(e));
}

Permutation standardize(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return word[a] < word[b]; });
  std::vector<int> ranks(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]]) {
      throw std::invalid_argument("standardize: duplicate entry " + std::to_string(word[order[r]]));
    }
    ranks[order[r]] = static_cast<int>(r + 1);
  }
  return Permutation::from_trusted(std::move(ranks));
}

namespace {

// Reads word[i] after optional reversal and negation, so that one scan
// serves a pattern and its reverse/flip images.
struct View {
  std::span<const int> w;
  bool reversed;
  bool negated;
  std::size_t size() const { return w.size(); }
  int operator[](std::size_t i) const {
    int v = reversed ? w[w.size() - 1 - i] : w[i];
    return negated ? -v : v;
  }
};

bool has_123(const View& a) {
  int first = INT_MAX, second = INT_MAX;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int v = a[i];
    if (v <= first) {
      first = v;
    } else if (v <= second) {
      second = v;
    } else {
      return true;
    }
  }
  return false;
}

// a_i < a_k < a_j with i < j < k. Right-to-left scan; `third` is the largest
// value popped so far, i.e. the best candidate for the "2".
bool has_132(const View& a) {
  std::vector<int> stack;
  stack.reserve(a.size());
  int third = INT_MIN;
  for (std::size_t t = a.size(); t-- > 0;) {
    int v = a[t];
    if (v < third) return true;
    while (!stack.empty() && stack.back() < v) {
      third = stack.back();
      stack.pop_back();
    }
    stack.push_back(v);
  }
  return false;
}

int code3(const Pattern& sigma) {
  const auto e = sigma.shape().entries();
  return e[0] * 100 + e[1] * 10 + e[2];
}

bool match_from(std::span<const int> word, std::span<const int> sigma, std::vector<int>& picked,
                std::size_t start) {
  const std::size_t t = picked.size();
  if (t == sigma.size()) return true;
  for (std::size_t i = start; i + (sigma.size() - t) <= word.size(); ++i) {
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s) {
      ok = (word[picked[s]] < word[i]) == (sigma[s] < sigma[t]);
    }
    if (!ok) continue;
    picked.push_back(static_cast<int>(i));
    if (match_from(word, sigma, picked, i + 1)) return true;
    picked.pop_back();
  }
  return false;
}

bool contains_generic(std::span<const int> word, std::span<const int> sigma) {
  std::vector<int> picked;
  return match_from(word, sigma, picked, 0);
}

// Occurrences of sigma whose last letter is `last`; the first m-1 letters come
// from the prefix.
bool completes_generic(std::span<const int> prefix, int last, std::span<const int> sigma,
                       std::vector<int>& picked, std::size_t start) {
  const std::size_t m = sigma.size();
  const std::size_t t = picked.size();
  if (t == m - 1) {
    for (std::size_t q = 0; q < t; ++q) {
      if ((prefix[picked[q]] < last) != (sigma[q] < sigma[m - 1])) return false;
    }
    return true;
  }
  for (std::size_t i = start; i < prefix.size(); ++i) {
    bool ok = true;
    for (std::size_t q = 0; q < t && ok; ++q) {
      ok = (prefix[picked[q]] < prefix[i]) == (sigma[q] < sigma[t]);
    }
    if (!ok) continue;
    picked.push_back(static_cast<int>(i));
    if (completes_generic(prefix, last, sigma, picked, i + 1)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(std::span<const int> word, const Pattern& sigma) {
  if (word.size() < sigma.size()) return false;
  if (sigma.size() != 3) return contains_generic(word, sigma.shape().entries());
  switch (code3(sigma)) {
    case 123: return has_123({word, false, false});
    case 321: return has_123({word, false, true});
    case 132: return has_132({word, false, false});
    case 231: return has_132({word, true, false});
    case 312: return has_132({word, false, true});
    case 213: return has_132({word, true, true});
  }
  return contains_generic(word, sigma.shape().entries());
}

bool completes_pattern(std::span<const int> prefix, int last, const Pattern& sigma) {
  if (prefix.size() + 1 < sigma.size()) return false;
  if (sigma.size() != 3) {
    std::vector<int> picked;
    return completes_generic(prefix, last, sigma.shape().entries(), picked, 0);
  }

  const int v = last;
  switch (code3(sigma)) {
    case 123: {  // a_i < a_j < v
      int lo = INT_MAX;
      for (int a : prefix) {
        if (a < v && lo < a) return true;
        lo = std::min(lo, a);
      }
      return false;
    }
    case 213: {  // a_j < a_i < v
      int hi_below = INT_MIN;
      for (int a : prefix) {
        if (a < v) {
          if (hi_below > a) return true;
          hi_below = std::max(hi_below, a);
        }
      }
      return false;
    }
    case 132: {  // a_i < v < a_j
      int lo = INT_MAX;
      for (int a : prefix) {
        if (a > v && lo < v) return true;
        lo = std::min(lo, a);
      }
      return false;
    }
    case 312: {  // a_j < v < a_i
      int hi = INT_MIN;
      for (int a : prefix) {
        if (a < v && hi > v) return true;
        hi = std::max(hi, a);
      }
      return false;
    }
    case 231: {  // v < a_i < a_j
      int lo_above = INT_MAX;
      for (int a : prefix) {
        if (a > v) {
          if (lo_above < a) return true;
          lo_above = std::min(lo_above, a);
        }
      }
      return false;
    }
    case 321: {  // v < a_j < a_i
      int hi = INT_MIN;
      for (int a : prefix) {
        if (a > v && hi > a) return true;
        hi = std::max(hi, a);
      }
      return false;
    }
  }
  return false;
}

std::string to_string(const Permutation& pi) { return "[" + join(pi.entries()) + "]"; }

Permutation parse_permutation(std::string_view text) { return Permutation(parse_int_list(text)); }

}  // namespace modkperm
