#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modkperm {

/// Parses comma-separated decimals, optionally wrapped in brackets. A bare run
/// of digits with no separators is read digit-wise ("12341634"), which is only
/// unambiguous for values below 10. Whitespace is ignored. Throws
/// std::invalid_argument on malformed input.
std::vector<int> parse_int_list(std::string_view text);

/// "1,2,3"
std::string join(std::span<const int> values, std::string_view sep = ",");

}  // namespace modkperm
