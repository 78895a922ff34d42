#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "squatscope/date.hpp"
#include "squatscope/ip.hpp"

namespace squatscope {

// The closed list of trademark business categories.
inline constexpr std::array<std::string_view, 22> kBusinessCategories = {
    "Adult Content",   "Blogging",        "Computers",         "Couriers",
    "E-Learning",      "E-Shop (Auctions)", "E-Shop (Online)", "E-Shop (Physical)",
    "Energy",          "File Sharing",    "Financial",         "Lifestyle",
    "News",            "Photography",     "Politics",          "Radio & TV",
    "Search Engines",  "Social Networks", "Software & Web",    "Streaming",
    "Telecom",         "Travel",
};

// Case-insensitive match against kBusinessCategories; returns the canonical
// spelling.
std::optional<std::string_view> canonical_category(std::string_view name);

enum class SeedOrigin : std::uint8_t { AlexaTop500, ManualPolitics, ManualEnergy };
const char* to_string(SeedOrigin origin);
std::optional<SeedOrigin> parse_seed_origin(std::string_view text);

struct TrademarkSeed {
  std::string trademark;  // e2LD
  std::string source_domain;
  std::string category;   // canonical, from kBusinessCategories
  std::optional<std::uint32_t> alexa_rank;
  SeedOrigin origin = SeedOrigin::AlexaTop500;

  // Exclusion criteria that need a human decision; the seed is kept.
  bool flag_short = false;            // trademark shorter than 4 characters
  bool flag_dictionary_word = false;  // trademark is a general-English word
  bool flagged() const { return flag_short || flag_dictionary_word; }
};

enum class DnsSource : std::uint8_t { Passive, Active };
const char* to_string(DnsSource source);

struct DnsObservation {
  Day date{};
  std::string qname;
  std::string rrtype;
  std::string rdata;             // raw field as read
  std::vector<IpAddress> ips;    // addresses parsed from rdata, sorted and unique
  std::uint64_t lookup_count = 0;  // 0 only for active DNS

  friend bool operator==(const DnsObservation&, const DnsObservation&) = default;
};

enum class LabelSource : std::uint8_t { PBL, MAL, SPA, APT, ALE };
inline constexpr std::array<LabelSource, 5> kAllLabelSources = {
    LabelSource::PBL, LabelSource::MAL, LabelSource::SPA, LabelSource::APT, LabelSource::ALE};
const char* to_string(LabelSource source);
std::optional<LabelSource> parse_label_source(std::string_view text);

struct LabelEvent {
  std::string domain;
  LabelSource source = LabelSource::PBL;
  Day date{};
  std::string detail;  // e.g. APT campaign

  friend bool operator==(const LabelEvent&, const LabelEvent&) = default;
};

struct CertRecord {
  std::vector<std::string> names;  // subject CN plus SANs
  std::string issuer;
  Day logged_at{};
};

}  // namespace squatscope
