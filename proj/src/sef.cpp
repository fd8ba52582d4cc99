#include "modkperm/sef.hpp"

#include <stdexcept>

#include "modkperm/counting.hpp"
#include "modkperm/text.hpp"

namespace modkperm {

SubexcedantFunction::SubexcedantFunction(std::initializer_list<int> values)
    : SubexcedantFunction(std::vector<int>(values)) {}

SubexcedantFunction::SubexcedantFunction(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1 || values_[i] > static_cast<int>(i + 1)) {
      throw std::invalid_argument("not a subexcedant function: " + join(values_) + " (position " +
                                  std::to_string(i + 1) + ")");
    }
  }
}

bool SubexcedantFunction::is_catalan() const noexcept {
  if (values_.empty()) return true;
  if (values_[0] != 1) return false;
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] > values_[i - 1] + 1) return false;
  }
  return true;
}

CatalanWord::CatalanWord(std::initializer_list<int> values) : CatalanWord(std::vector<int>(values)) {}

CatalanWord::CatalanWord(std::vector<int> values) : word_(std::move(values)) {
  if (!word_.is_catalan()) throw std::invalid_argument("not a Catalan word: " + join(word_.values()));
}

AreaSequence::AreaSequence(std::initializer_list<int> values) : AreaSequence(std::vector<int>(values)) {}

AreaSequence::AreaSequence(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const int cap = i == 0 ? 0 : values_[i - 1] + 1;
    if (values_[i] < 0 || values_[i] > cap) {
      throw std::invalid_argument("not an area sequence: " + join(values_));
    }
  }
}

DyckPath::DyckPath(std::string_view steps) : steps_(steps) {
  long height = 0;
  for (char c : steps_) {
    if (c == 'n') {
      ++height;
    } else if (c == 'e') {
      if (--height < 0) throw std::invalid_argument("Dyck path dips below the diagonal: " + steps_);
    } else {
      throw std::invalid_argument("Dyck path letters are n and e, got '" + std::string(1, c) + "'");
    }
  }
  if (height != 0) throw std::invalid_argument("Dyck path does not end on the diagonal: " + steps_);
}

Permutation sef_to_perm(const SubexcedantFunction& f) {
  const auto n = f.size();
  std::vector<int> value(n + 1), pos(n + 1);
  for (std::size_t i = 1; i <= n; ++i) value[i] = pos[i] = static_cast<int>(i);
  // Left-multiplying by (i f(i)) swaps the two values wherever they sit.
  for (std::size_t i = 1; i <= n; ++i) {
    const int a = static_cast<int>(i);
    const int b = f(i);
    if (a == b) continue;
    std::swap(value[pos[a]], value[pos[b]]);
    std::swap(pos[a], pos[b]);
  }
  return Permutation::from_trusted(std::vector<int>(value.begin() + 1, value.end()));
}

SubexcedantFunction perm_to_sef(const Permutation& pi) {
  const auto n = pi.size();
  std::vector<int> value(n + 1), pos(n + 1), f(n);
  for (std::size_t i = 1; i <= n; ++i) {
    value[i] = pi(i);
    pos[pi(i)] = static_cast<int>(i);
  }
  for (std::size_t j = n; j >= 1; --j) {
    const int a = static_cast<int>(j);
    const int b = value[j];
    f[j - 1] = b;
    if (a != b) {
      std::swap(value[pos[a]], value[pos[b]]);
      std::swap(pos[a], pos[b]);
    }
    if (value[j] != a) throw std::logic_error("perm_to_sef: peeled prefix is not a permutation");
  }
  return SubexcedantFunction(std::move(f));
}

AreaSequence catalan_word_to_area(const CatalanWord& w) {
  std::vector<int> a;
  a.reserve(w.size());
  for (int v : w.values()) a.push_back(v - 1);
  return AreaSequence(std::move(a));
}

CatalanWord area_to_catalan_word(const AreaSequence& a) {
  std::vector<int> w;
  w.reserve(a.size());
  for (int v : a.values()) w.push_back(v + 1);
  return CatalanWord(std::move(w));
}

DyckPath area_to_dyck(const AreaSequence& a) {
  std::string steps;
  const auto n = static_cast<int>(a.size());
  steps.reserve(2 * a.size());
  int x = 0;
  for (int i = 1; i <= n; ++i) {
    const int column = (i - 1) - a(i);
    steps.append(static_cast<std::size_t>(column - x), 'e');
    x = column;
    steps.push_back('n');
  }
  steps.append(static_cast<std::size_t>(n - x), 'e');
  return DyckPath(steps);
}

AreaSequence dyck_to_area(const DyckPath& p) {
  std::vector<int> a;
  int x = 0;
  for (char c : p.str()) {
    if (c == 'e') {
      ++x;
    } else {
      a.push_back(static_cast<int>(a.size()) - x);
    }
  }
  return AreaSequence(std::move(a));
}

DyckPath catalan_word_to_dyck(const CatalanWord& w) { return area_to_dyck(catalan_word_to_area(w)); }

CatalanWord dyck_to_catalan_word(const DyckPath& p) { return area_to_catalan_word(dyck_to_area(p)); }

std::vector<int> row_box_counts(const DyckPath& p) {
  const auto a = dyck_to_area(p);
  std::vector<int> out;
  out.reserve(a.size());
  for (std::size_t i = 1; i <= a.size(); ++i) out.push_back(static_cast<int>(i) - 1 - a(i));
  return out;
}

bool is_in_L_k(const DyckPath& p, int k) {
  if (k < 1) throw std::invalid_argument("is_in_L_k: k must be >= 1");
  for (int boxes : row_box_counts(p)) {
    if (boxes % k != 0) return false;
  }
  return true;
}

CatalanWordStream::CatalanWordStream(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 1) throw std::invalid_argument("generate_mp_c: need n >= 0 and k >= 1");
  word_.reserve(static_cast<std::size_t>(n));
  cursor_.assign(static_cast<std::size_t>(n) + 1, 0);
}

int CatalanWordStream::lowest(std::size_t pos) const {
  const int residue = static_cast<int>(pos + 1) % k_;
  return residue == 0 ? k_ : residue;
}

std::optional<CatalanWord> CatalanWordStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    cursor_[0] = lowest(0);
    if (n_ == 0) return CatalanWord{};
  } else {
    if (word_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    word_.pop_back();
  }

  while (true) {
    const auto depth = word_.size();
    const int cap = depth == 0 ? 1 : word_.back() + 1;
    const int v = cursor_[depth];
    if (v <= cap) {
      cursor_[depth] = v + k_;
      word_.push_back(v);
      if (static_cast<int>(word_.size()) == n_) return CatalanWord(word_);
      cursor_[word_.size()] = lowest(word_.size());
      continue;
    }
    if (word_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    word_.pop_back();
  }
}

CatalanWordStream generate_mp_c(int n, int k) { return CatalanWordStream(n, k); }

std::vector<CatalanWord> generate_mp_c_all(int n, int k) {
  std::vector<CatalanWord> out;
  for (const auto& w : generate_mp_c(n, k)) out.push_back(w);
  return out;
}

BigCount count_mp_c_closed(unsigned n, unsigned k) { return a_k_closed(n, k); }

SubexcedantFunction parse_sef(std::string_view text) { return SubexcedantFunction(parse_int_list(text)); }

std::string to_string(const SubexcedantFunction& f) { return join(f.values()); }
std::string to_string(const CatalanWord& w) { return join(w.values()); }
std::string to_string(const AreaSequence& a) { return join(a.values()); }

}  // namespace modkperm
