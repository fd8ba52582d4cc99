#include "modkperm/text.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace modkperm {

std::vector<int> parse_int_list(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unbalanced bracket in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> out;
  if (s.empty()) return out;

  if (s.find(',') == std::string::npos) {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("not a digit word: '" + std::string(text) + "'");
      }
      out.push_back(c - '0');
    }
    return out;
  }

  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    std::string_view tok(s.data() + pos, next - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad integer '" + std::string(tok) + "' in '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

std::string join(std::span<const int> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace modkperm
