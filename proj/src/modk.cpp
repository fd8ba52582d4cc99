#include "modkperm/modk.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

namespace modkperm {

void ModKClass::validate() const {
  if (n < 0) throw std::invalid_argument("n must be >= 0, got " + std::to_string(n));
  if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  if (r < 1 || r > k) {
    throw std::invalid_argument("r must lie in 1.." + std::to_string(k) + ", got " + std::to_string(r));
  }
}

void AvoidanceQuery::validate() const {
  cls.validate();
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    for (std::size_t j = i + 1; j < forbidden.size(); ++j) {
      if (forbidden[i] == forbidden[j]) {
        throw std::invalid_argument("duplicate forbidden pattern " + forbidden[i].word());
      }
    }
  }
}

int revflip_remainder(int r, int k) {
  int m = ((2 - r) % k + k) % k;
  return m == 0 ? k : m;
}

bool is_mod_k_alternating(const Permutation& pi, int k, int r) {
  ModKClass{static_cast<int>(pi.size()), k, r}.validate();
  for (std::size_t i = 1; i <= pi.size(); ++i) {
    if ((pi(i) - (r + static_cast<int>(i) - 1)) % k != 0) return false;
  }
  return true;
}

namespace {

int first_value_with_residue(int residue, int k) { return residue == 0 ? k : residue; }

bool completes_any(std::span<const int> prefix, int value, const std::vector<Pattern>& forbidden) {
  for (const auto& p : forbidden) {
    if (completes_pattern(prefix, value, p)) return true;
  }
  return false;
}

// Depth-first counter over one subtree; owns its scratch state so several can
// run concurrently.
struct Counter {
  const AvoidanceQuery& q;
  std::vector<int> prefix;
  std::vector<bool> used;

  explicit Counter(const AvoidanceQuery& query)
      : q(query), used(static_cast<std::size_t>(query.cls.n) + 1, false) {
    prefix.reserve(static_cast<std::size_t>(query.cls.n));
  }

  std::uint64_t run() {
    const int n = q.cls.n;
    const int depth = static_cast<int>(prefix.size());
    if (depth == n) return 1;
    const int k = q.cls.k;
    std::uint64_t total = 0;
    for (int v = first_value_with_residue(q.cls.residue_at(depth + 1), k); v <= n; v += k) {
      if (used[v] || completes_any(prefix, v, q.forbidden)) continue;
      used[v] = true;
      prefix.push_back(v);
      total += run();
      prefix.pop_back();
      used[v] = false;
    }
    return total;
  }
};

}  // namespace

ModKStream::ModKStream(AvoidanceQuery query) : query_(std::move(query)) {
  query_.validate();
  const auto n = static_cast<std::size_t>(query_.cls.n);
  used_.assign(n + 1, false);
  cursor_.assign(n + 1, 0);
  prefix_.reserve(n);
}

int ModKStream::first_candidate(int depth) const {
  return first_value_with_residue(query_.cls.residue_at(depth + 1), query_.cls.k);
}

bool ModKStream::admissible(int value) const {
  return !used_[value] && !completes_any(prefix_, value, query_.forbidden);
}

std::optional<Permutation> ModKStream::next() {
  if (done_) return std::nullopt;
  const int n = query_.cls.n;
  const int k = query_.cls.k;

  if (!started_) {
    started_ = true;
    cursor_[0] = first_candidate(0);
  } else {
    // Resume after the permutation yielded last time.
    if (prefix_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    used_[prefix_.back()] = false;
    prefix_.pop_back();
  }
  if (n == 0) return Permutation{};

  while (true) {
    const auto depth = prefix_.size();
    int v = cursor_[depth];
    while (v <= n && !admissible(v)) v += k;
    if (v <= n) {
      cursor_[depth] = v + k;
      used_[v] = true;
      prefix_.push_back(v);
      if (static_cast<int>(prefix_.size()) == n) return Permutation::from_trusted(prefix_);
      cursor_[prefix_.size()] = first_candidate(static_cast<int>(prefix_.size()));
      continue;
    }
    if (prefix_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    used_[prefix_.back()] = false;
    prefix_.pop_back();
  }
}

ModKStream generate(const AvoidanceQuery& query) { return ModKStream(query); }

std::vector<Permutation> generate_all(const AvoidanceQuery& query) {
  std::vector<Permutation> out;
  for (const auto& pi : generate(query)) out.push_back(pi);
  return out;
}

BigCount count_brute(const AvoidanceQuery& query, CountOptions options) {
  query.validate();
  const int n = query.cls.n;
  unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.workers;
  if (n == 0 || workers == 1) {
    Counter c(query);
    return BigCount(static_cast<unsigned long>(c.run()));
  }

  std::vector<int> roots;
  for (int v = first_value_with_residue(query.cls.residue_at(1), query.cls.k); v <= n; v += query.cls.k) {
    roots.push_back(v);
  }
  // Round-robin the first-level branches over the workers.
  std::vector<std::future<std::uint64_t>> parts;
  for (unsigned w = 0; w < workers && w < roots.size(); ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      std::uint64_t sub = 0;
      for (std::size_t i = w; i < roots.size(); i += workers) {
        Counter c(query);
        c.used[roots[i]] = true;
        c.prefix.push_back(roots[i]);
        sub += c.run();
      }
      return sub;
    }));
  }
  BigCount total = 0;
  for (auto& f : parts) total += static_cast<unsigned long>(f.get());
  return total;
}

BigCount count_mp(int n, int k) {
  ModKClass{n, k, 1}.validate();
  const int q = n / k;
  const int j = n % k;
  return power(factorial(q + (j > 0 ? 1 : 0)), j) * power(factorial(q), k - j);
}

BigCount count_mp(int n, int k, int r) {
  ModKClass{n, k, r}.validate();
  if (r == 1) return count_mp(n, k);
  if (n % k != 0) return 0;
  return power(factorial(n / k), k);
}

std::vector<int> left_to_right_maxima(const Permutation& pi) {
  std::vector<int> out;
  int best = 0;
  for (int v : pi) {
    if (v > best) {
      out.push_back(v);
      best = v;
    }
  }
  return out;
}

std::vector<int> hole_values(const Permutation& pi) {
  std::vector<int> out;
  int best = 0;
  for (int v : pi) {
    if (v > best) {
      best = v;
    } else {
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool check_321_pap_structure(const Permutation& pi) {
  static const Pattern p321({3, 2, 1});
  if (pi.is_identity()) throw std::invalid_argument("identity has no hole values: " + to_string(pi));
  if (!is_mod_k_alternating(pi, 2, 1)) {
    throw std::invalid_argument("not parity-alternating: " + to_string(pi));
  }
  if (contains_pattern(pi, p321)) throw std::invalid_argument("contains 321: " + to_string(pi));

  const auto n = pi.size();
  std::vector<bool> is_max(n + 1, false);
  for (int v : left_to_right_maxima(pi)) is_max[v] = true;

  int h = 0;
  for (int v = static_cast<int>(n) - 1; v >= 1; --v) {
    if (!is_max[v] && !is_max[v + 1]) {
      h = v;
      break;
    }
  }
  if (h == 0) return false;

  const auto inv = inverse(pi);
  const auto p = inv(h);
  const auto q = inv(h + 1);
  if (q < p) return false;
  if (q == p + 1) return true;
  const auto between = q - p - 1;
  if (between % 2 != 0) return false;
  for (auto pos = p + 1; pos < q; ++pos) {
    if (!is_max[pi(pos)]) return false;
    if (pos > p + 1 && pi(pos) != pi(pos - 1) + 1) return false;
  }
  return true;
}

std::vector<BigCount> remark_sequence(const Pattern& pattern, int n_max, CountOptions options) {
  const auto w = pattern.word();
  if (w != "123" && w != "321") {
    throw std::invalid_argument("remark sequences exist for 123 and 321 only, got " + w);
  }
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  std::vector<BigCount> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(count_brute({{n, 2, 1}, {pattern}}, options));
  }
  return out;
}

}  // namespace modkperm
