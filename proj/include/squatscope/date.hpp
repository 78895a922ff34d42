#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace squatscope {

// Calendar day. All dataset timestamps are day-granular.
using Day = std::chrono::sys_days;

// Parses YYYY-MM-DD. Returns nullopt on anything else, including invalid
// calendar dates such as 2015-02-30.
std::optional<Day> parse_iso_date(std::string_view text);

std::string format_iso_date(Day day);

inline long days_between(Day from, Day to) {
  return static_cast<long>((to - from).count());
}

}  // namespace squatscope
