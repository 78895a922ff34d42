#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "squatscope/cdf.hpp"
#include "squatscope/date.hpp"
#include "squatscope/domain.hpp"
#include "squatscope/ingest.hpp"
#include "squatscope/records.hpp"
#include "squatscope/routing.hpp"
#include "squatscope/scan.hpp"
#include "squatscope/sets.hpp"

namespace squatscope {

// ---- timelines --------------------------------------------------------------

struct DomainTimeline {
  std::string e2ld;  // registrable domain
  Day first_seen{};
  Day last_seen{};
  std::map<Day, std::uint64_t> daily_lookups;

  std::int64_t lifetime_days() const { return days_between(first_seen, last_seen); }
  void add(Day date, std::uint64_t lookups);
  void merge(const DomainTimeline& other);

  friend bool operator==(const DomainTimeline&, const DomainTimeline&) = default;
};

using TimelineMap = std::map<std::string, DomainTimeline, std::less<>>;

// Timelines of the registrable domains of hits carrying `kind`.
TimelineMap build_timelines(std::span<const ScanHit> hits,
                            SquatKind kind = SquatKind::Combosquatting);
void merge_timelines(TimelineMap& into, const TimelineMap& from);

// Distribution of last_seen - first_seen, optionally restricted to `subset`.
ValueCounts lifetime_counts(const TimelineMap& timelines, const DomainSet* subset = nullptr);
std::vector<CdfPoint> lifetime_cdf(const TimelineMap& timelines, const DomainSet* subset = nullptr);

// ---- detection lag ----------------------------------------------------------

using FirstLabelDates = std::map<LabelSource, std::map<std::string, Day>>;

// Earliest event per (source, registrable domain). Unparsable domains are
// counted in `skipped` when given.
FirstLabelDates first_label_dates(std::span<const LabelEvent> events, const SuffixList& suffixes,
                                  std::uint64_t* skipped = nullptr);

// first_label_date - first_seen per source, over domains with both.
std::map<LabelSource, ValueCounts> detection_lag(const TimelineMap& timelines,
                                                 const FirstLabelDates& first_label);

// ---- daily series -----------------------------------------------------------

// Day -> distinct registrable domains carrying a verdict kind.
class DailyActive {
 public:
  void add(Day date, const std::string& registrable) { days_[date].insert(registrable); }
  void merge(const DailyActive& other);
  std::map<Day, std::uint64_t> series() const;

  friend bool operator==(const DailyActive&, const DailyActive&) = default;

 private:
  std::map<Day, std::set<std::string>> days_;
};

DailyActive daily_active(std::span<const ScanHit> hits, SquatKind kind);
std::map<Day, std::uint64_t> daily_active_counts(std::span<const ScanHit> hits, SquatKind kind);

std::map<Day, std::uint64_t> lookup_volume_series(const TimelineMap& timelines,
                                                  const DomainSet* subset = nullptr);
// Each value divided by the series maximum.
std::map<Day, double> normalize_series(const std::map<Day, std::uint64_t>& series);

// ---- Alexa rank histogram ---------------------------------------------------

inline constexpr std::uint32_t kRankBinWidth = 20000;
inline constexpr std::size_t kRankBins = 50;

class RankOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Bins are (lo, hi]: ranks 1..20000 fall in bin 1, 20001..40000 in bin 2.
std::size_t rank_bin(double rank);

// Mean of all observed ranks per domain.
std::map<std::string, double> mean_alexa_ranks(std::span<const AlexaRow> rows);

struct RankHistogram {
  std::array<std::uint64_t, kRankBins> abusive{};
  std::array<std::uint64_t, kRankBins> other{};

  friend bool operator==(const RankHistogram&, const RankHistogram&) = default;
};

RankHistogram alexa_rank_histogram(const std::map<std::string, double>& mean_rank,
                                   const DomainSet& abuse);

// ---- infrastructure concentration -------------------------------------------

struct KeyCount {
  std::string key;
  std::uint64_t domains = 0;

  friend bool operator==(const KeyCount&, const KeyCount&) = default;
};

struct Concentration {
  std::vector<KeyCount> per_key;   // domain count descending, then key ascending
  ValueCounts keys_per_domain;     // distinct keys per domain
  std::uint64_t domains = 0;       // domains with at least one key

  double top1_share() const;

  friend bool operator==(const Concentration&, const Concentration&) = default;
};

struct ConcentrationReport {
  Concentration cidr, asn, country;
  ValueCounts ips_per_domain;
  std::uint64_t no_route = 0;  // (domain, ip) pairs without a matching prefix

  nlohmann::json to_json() const;

  friend bool operator==(const ConcentrationReport&, const ConcentrationReport&) = default;
};

// Bipartite domain <-> infrastructure graph; shard-mergeable.
class InfraGraph {
 public:
  // Attributes every IP of the hit with the snapshot closest to its date.
  void add(const ScanHit& hit, const RoutingHistory& routing);
  void merge(const InfraGraph& other);
  ConcentrationReport report() const;

 private:
  struct Edges {
    std::set<IpAddress> ips;
    std::set<std::string> cidrs, asns, countries;
  };
  std::map<std::string, Edges> domains_;
  std::uint64_t no_route_ = 0;
};

// Domains restricted to `subset` when given; only Combosquatting hits count.
ConcentrationReport concentration_report(std::span<const ScanHit> hits,
                                         const RoutingHistory& routing,
                                         const DomainSet* subset = nullptr);

// ---- per-category counts ----------------------------------------------------

struct CategoryCount {
  std::string category;
  std::uint64_t domains = 0;  // distinct registrable domains
  std::uint64_t seeds = 0;    // trademarks in the category
  double normalized = 0.0;    // domains / seeds, 0 when the category has no seeds

  friend bool operator==(const CategoryCount&, const CategoryCount&) = default;
};

// One row per business category in kBusinessCategories order.
std::vector<CategoryCount> category_counts(const DomainSet& domains,
                                           std::span<const TrademarkSeed> seeds);

}  // namespace squatscope
