#include "squatscope/routing.hpp"

#include <algorithm>
#include <charconv>

#include "squatscope/fileio.hpp"
#include "squatscope/strings.hpp"

namespace squatscope {

namespace {

IpAddress mask(IpAddress ip, unsigned key_bits) {
  for (unsigned i = key_bits; i < 128; ++i) {
    ip.bytes[i / 8] &= static_cast<std::uint8_t>(~(1u << (7 - i % 8)));
  }
  return ip;
}

}  // namespace

std::optional<Prefix> Prefix::parse(std::string_view cidr) {
  cidr = trim(cidr);
  auto slash = cidr.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  auto ip = IpAddress::parse(cidr.substr(0, slash));
  if (!ip) return std::nullopt;
  auto len_text = cidr.substr(slash + 1);
  unsigned len = 0;
  auto [p, ec] = std::from_chars(len_text.data(), len_text.data() + len_text.size(), len);
  if (ec != std::errc{} || p != len_text.data() + len_text.size() || len_text.empty()) {
    return std::nullopt;
  }
  if (len > (ip->v4 ? 32u : 128u)) return std::nullopt;
  Prefix prefix;
  prefix.length = len;
  prefix.network = mask(*ip, ip->v4 ? len + kV4MappedBits : len);
  prefix.network.v4 = ip->v4;
  return prefix;
}

bool Prefix::contains(const IpAddress& ip) const {
  if (ip.v4 != network.v4) return false;
  const unsigned bits = key_length();
  for (unsigned i = 0; i < bits; ++i) {
    if (ip.bit(i) != network.bit(i)) return false;
  }
  return true;
}

std::string Prefix::to_string() const {
  return network.to_string() + "/" + std::to_string(length);
}

RoutingSnapshot::RoutingSnapshot() : nodes_(1) {}

void RoutingSnapshot::add(const Prefix& prefix, std::uint32_t asn, std::string country) {
  std::uint32_t node = 0;
  const unsigned bits = prefix.key_length();
  for (unsigned i = 0; i < bits; ++i) {
    const unsigned b = prefix.network.bit(i);
    if (nodes_[node].child[b] == 0) {
      nodes_[node].child[b] = static_cast<std::uint32_t>(nodes_.size());
      nodes_.emplace_back();
    }
    node = nodes_[node].child[b];
  }
  RouteInfo info{prefix.to_string(), asn, std::move(country)};
  if (nodes_[node].route >= 0) {
    routes_[static_cast<std::size_t>(nodes_[node].route)].second = std::move(info);
  } else {
    nodes_[node].route = static_cast<std::int32_t>(routes_.size());
    routes_.emplace_back(prefix, std::move(info));
  }
}

std::optional<RouteInfo> RoutingSnapshot::lookup(const IpAddress& ip) const {
  std::int32_t best = nodes_[0].route;
  std::uint32_t node = 0;
  for (unsigned i = 0; i < 128; ++i) {
    node = nodes_[node].child[ip.bit(i)];
    if (node == 0) break;
    if (nodes_[node].route >= 0) best = nodes_[node].route;
  }
  if (best < 0) return std::nullopt;
  const auto& entry = routes_[static_cast<std::size_t>(best)];
  // A v6 ::/0 style route must not capture v4-mapped addresses and vice versa.
  if (entry.first.network.v4 != ip.v4) return std::nullopt;
  return entry.second;
}

RoutingSnapshot RoutingSnapshot::from_string(std::string_view text) {
  RoutingSnapshot snap;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') return;
    auto fields = split(t, '\t');
    auto bad = [&] {
      throw RoutingError("routing line " + std::to_string(lineno) +
                         ": expected `prefix<TAB>asn<TAB>country`");
    };
    if (fields.size() != 3) bad();
    auto prefix = Prefix::parse(fields[0]);
    std::string_view asn_text = trim(fields[1]);
    if (asn_text.starts_with("AS") || asn_text.starts_with("as")) asn_text.remove_prefix(2);
    std::uint32_t asn = 0;
    auto [p, ec] = std::from_chars(asn_text.data(), asn_text.data() + asn_text.size(), asn);
    if (!prefix || ec != std::errc{} || p != asn_text.data() + asn_text.size()) bad();
    std::string cc(trim(fields[2]));
    for (char& c : cc) c = static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
    snap.add(*prefix, asn, std::move(cc));
  });
  return snap;
}

RoutingSnapshot RoutingSnapshot::from_file(const std::filesystem::path& path) {
  return from_string(read_text_file(path));
}

std::optional<RouteInfo> lpm_lookup(const IpAddress& ip, const RoutingSnapshot& snapshot) {
  return snapshot.lookup(ip);
}

void RoutingHistory::add(Day date, RoutingSnapshot snapshot) {
  auto it = std::upper_bound(snapshots_.begin(), snapshots_.end(), date,
                             [](Day d, const auto& e) { return d < e.first; });
  snapshots_.emplace(it, date, std::move(snapshot));
}

const RoutingSnapshot* RoutingHistory::closest(Day date) const {
  if (snapshots_.empty()) return nullptr;
  auto it = std::lower_bound(snapshots_.begin(), snapshots_.end(), date,
                             [](const auto& e, Day d) { return e.first < d; });
  if (it == snapshots_.end()) return &snapshots_.back().second;
  if (it == snapshots_.begin()) return &it->second;
  auto prev = std::prev(it);
  return (date - prev->first) <= (it->first - date) ? &prev->second : &it->second;
}

}  // namespace squatscope
