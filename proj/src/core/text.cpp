#include "starideal/text.hpp"

#include <cctype>
#include <charconv>

#include "starideal/error.hpp"

namespace starideal::text {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  s = trim(s);
  if (s.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size()) {
      char ch = s[i];
      if (ch == '(' || ch == '[' || ch == '{') ++depth;
      if (ch == ')' || ch == ']' || ch == '}') --depth;
      if (ch != sep || depth != 0) continue;
    }
    auto piece = trim(s.substr(start, i - start));
    if (piece.empty()) throw UsageError("empty entry in list '" + std::string(s) + "'");
    out.emplace_back(piece);
    start = i + 1;
  }
  return out;
}

long parse_long(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw UsageError("expected an integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace starideal::text
