#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "squatscope/date.hpp"
#include "squatscope/ip.hpp"

namespace squatscope {

class RoutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Prefix {
  IpAddress network;   // host bits cleared
  unsigned length = 0;  // within its own family (0-32 for IPv4, 0-128 for IPv6)

  static std::optional<Prefix> parse(std::string_view cidr);
  unsigned key_length() const { return network.v4 ? length + kV4MappedBits : length; }
  bool contains(const IpAddress& ip) const;
  std::string to_string() const;

  friend bool operator==(const Prefix&, const Prefix&) = default;
};

struct RouteInfo {
  std::string cidr;
  std::uint32_t asn = 0;
  std::string country;

  friend bool operator==(const RouteInfo&, const RouteInfo&) = default;
};

// Prefix table organized as a binary trie for longest-prefix match.
// Immutable once loaded.
class RoutingSnapshot {
 public:
  RoutingSnapshot();

  // TSV `prefix asn country_code`, '#' comments. ASN may carry an "AS" prefix.
  static RoutingSnapshot from_string(std::string_view text);
  static RoutingSnapshot from_file(const std::filesystem::path& path);

  // A repeated prefix replaces the earlier entry.
  void add(const Prefix& prefix, std::uint32_t asn, std::string country);

  // Longest matching prefix; nullopt is NoRoute.
  std::optional<RouteInfo> lookup(const IpAddress& ip) const;

  std::size_t size() const { return routes_.size(); }
  const std::vector<std::pair<Prefix, RouteInfo>>& routes() const { return routes_; }

 private:
  struct Node {
    std::uint32_t child[2] = {0, 0};  // 0 = absent (root is never a child)
    std::int32_t route = -1;
  };
  std::vector<Node> nodes_;
  std::vector<std::pair<Prefix, RouteInfo>> routes_;
};

std::optional<RouteInfo> lpm_lookup(const IpAddress& ip, const RoutingSnapshot& snapshot);

// Several dated snapshots; an observation is attributed with the snapshot
// closest in date (earlier one on ties).
class RoutingHistory {
 public:
  void add(Day date, RoutingSnapshot snapshot);
  void add_undated(RoutingSnapshot snapshot) { add(Day{}, std::move(snapshot)); }
  const RoutingSnapshot* closest(Day date) const;
  bool empty() const { return snapshots_.empty(); }

 private:
  std::vector<std::pair<Day, RoutingSnapshot>> snapshots_;  // sorted by date
};

}  // namespace squatscope
