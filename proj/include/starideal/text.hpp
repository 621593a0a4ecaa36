#pragma once

#include <string>
#include <string_view>
#include <vector>

// Small parsing helpers shared by the literal readers of every backend.
namespace starideal::text {

std::string_view trim(std::string_view s);

/// Splits on commas at bracket depth zero; empty input gives an empty list.
std::vector<std::string> split_list(std::string_view s, char sep = ',');

/// Strict integer parse; throws UsageError naming the token on failure.
long parse_long(std::string_view token);

}  // namespace starideal::text
