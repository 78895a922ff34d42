#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace squatscope {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

// Hash containers keyed by std::string that accept string_view lookups.
using StringSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;
template <class V>
using StringMap = std::unordered_map<std::string, V, StringHash, std::equal_to<>>;

std::string to_lower_ascii(std::string_view s);
std::string_view trim(std::string_view s);

// Splits on a single delimiter, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char delim);

// Iterates the lines of a text blob, stripping a trailing '\r'.
template <class F>
void for_each_line(std::string_view text, F&& fn) {
  std::size_t pos = 0;
  std::size_t lineno = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++lineno, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace squatscope
