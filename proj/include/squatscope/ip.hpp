#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace squatscope {

// IPv4 or IPv6 address. IPv4 is held in IPv4-mapped form (::ffff:a.b.c.d) so
// both families share one 128-bit key space.
struct IpAddress {
  std::array<std::uint8_t, 16> bytes{};
  bool v4 = false;

  static std::optional<IpAddress> parse(std::string_view text);
  static IpAddress from_v4(std::uint32_t host_order);

  // Bit i counted from the most significant bit of the 128-bit key.
  bool bit(unsigned i) const { return (bytes[i / 8] >> (7 - i % 8)) & 1u; }

  std::string to_string() const;

  friend bool operator==(const IpAddress&, const IpAddress&) = default;
  friend auto operator<=>(const IpAddress&, const IpAddress&) = default;
};

// Offset of IPv4 bits inside the 128-bit key.
inline constexpr unsigned kV4MappedBits = 96;

}  // namespace squatscope
