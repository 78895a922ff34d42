#include "squatscope/analytics.hpp"

#include <algorithm>
#include <cmath>

namespace squatscope {

void DomainTimeline::add(Day date, std::uint64_t lookups) {
  if (daily_lookups.empty()) {
    first_seen = last_seen = date;
  } else {
    first_seen = std::min(first_seen, date);
    last_seen = std::max(last_seen, date);
  }
  daily_lookups[date] += lookups;
}

void DomainTimeline::merge(const DomainTimeline& other) {
  for (const auto& [d, n] : other.daily_lookups) add(d, n);
}

TimelineMap build_timelines(std::span<const ScanHit> hits, SquatKind kind) {
  TimelineMap out;
  for (const auto& h : hits) {
    if (!h.has(kind)) continue;
    auto it = out.find(h.registrable);
    if (it == out.end()) {
      it = out.emplace(h.registrable, DomainTimeline{}).first;
      it->second.e2ld = h.registrable;
    }
    it->second.add(h.obs.date, h.obs.lookup_count);
  }
  return out;
}

void merge_timelines(TimelineMap& into, const TimelineMap& from) {
  for (const auto& [k, t] : from) {
    auto [it, inserted] = into.try_emplace(k, t);
    if (!inserted) it->second.merge(t);
  }
}

ValueCounts lifetime_counts(const TimelineMap& timelines, const DomainSet* subset) {
  ValueCounts counts;
  for (const auto& [k, t] : timelines) {
    if (subset && !subset->contains(k)) continue;
    counts.add(t.lifetime_days());
  }
  return counts;
}

std::vector<CdfPoint> lifetime_cdf(const TimelineMap& timelines, const DomainSet* subset) {
  return lifetime_counts(timelines, subset).cdf();
}

FirstLabelDates first_label_dates(std::span<const LabelEvent> events, const SuffixList& suffixes,
                                  std::uint64_t* skipped) {
  FirstLabelDates out;
  for (const auto& ev : events) {
    auto name = try_parse_domain(ev.domain, suffixes);
    if (!name) {
      if (skipped) ++*skipped;
      continue;
    }
    auto& m = out[ev.source];
    auto [it, inserted] = m.try_emplace(name->registrable(), ev.date);
    if (!inserted && ev.date < it->second) it->second = ev.date;
  }
  return out;
}

std::map<LabelSource, ValueCounts> detection_lag(const TimelineMap& timelines,
                                                 const FirstLabelDates& first_label) {
  std::map<LabelSource, ValueCounts> out;
  for (const auto& [source, dates] : first_label) {
    for (const auto& [domain, labelled] : dates) {
      auto it = timelines.find(domain);
      if (it == timelines.end()) continue;
      out[source].add(days_between(it->second.first_seen, labelled));
    }
  }
  return out;
}

void DailyActive::merge(const DailyActive& other) {
  for (const auto& [d, s] : other.days_) days_[d].insert(s.begin(), s.end());
}

std::map<Day, std::uint64_t> DailyActive::series() const {
  std::map<Day, std::uint64_t> out;
  for (const auto& [d, s] : days_) out.emplace(d, s.size());
  return out;
}

DailyActive daily_active(std::span<const ScanHit> hits, SquatKind kind) {
  DailyActive active;
  for (const auto& h : hits) {
    if (h.has(kind)) active.add(h.obs.date, h.registrable);
  }
  return active;
}

std::map<Day, std::uint64_t> daily_active_counts(std::span<const ScanHit> hits, SquatKind kind) {
  return daily_active(hits, kind).series();
}

std::map<Day, std::uint64_t> lookup_volume_series(const TimelineMap& timelines,
                                                  const DomainSet* subset) {
  std::map<Day, std::uint64_t> out;
  for (const auto& [k, t] : timelines) {
    if (subset && !subset->contains(k)) continue;
    for (const auto& [d, n] : t.daily_lookups) out[d] += n;
  }
  return out;
}

std::map<Day, double> normalize_series(const std::map<Day, std::uint64_t>& series) {
  std::uint64_t peak = 0;
  for (const auto& [d, n] : series) peak = std::max(peak, n);
  std::map<Day, double> out;
  for (const auto& [d, n] : series) {
    out.emplace(d, peak == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(peak));
  }
  return out;
}

std::size_t rank_bin(double rank) {
  if (!(rank >= 1.0) || rank > static_cast<double>(kRankBinWidth * kRankBins)) {
    throw RankOutOfRange("alexa rank out of range: " + std::to_string(rank));
  }
  return static_cast<std::size_t>(std::ceil(rank / kRankBinWidth));
}

std::map<std::string, double> mean_alexa_ranks(std::span<const AlexaRow> rows) {
  std::map<std::string, std::pair<double, std::uint64_t>> sums;
  for (const auto& r : rows) {
    auto& s = sums[r.domain];
    s.first += r.rank;
    ++s.second;
  }
  std::map<std::string, double> out;
  for (const auto& [d, s] : sums) out.emplace(d, s.first / static_cast<double>(s.second));
  return out;
}

RankHistogram alexa_rank_histogram(const std::map<std::string, double>& mean_rank,
                                   const DomainSet& abuse) {
  RankHistogram h;
  for (const auto& [domain, rank] : mean_rank) {
    const std::size_t bin = rank_bin(rank);
    auto& target = abuse.contains(domain) ? h.abusive : h.other;
    ++target[bin - 1];
  }
  return h;
}

double Concentration::top1_share() const {
  if (domains == 0 || per_key.empty()) return 0.0;
  return static_cast<double>(per_key.front().domains) / static_cast<double>(domains);
}

namespace {

nlohmann::json cdf_json(const ValueCounts& counts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : counts.cdf()) arr.push_back({{"x", p.x}, {"fraction", p.fraction}});
  return arr;
}

nlohmann::json concentration_json(const Concentration& c) {
  nlohmann::json top = nlohmann::json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(c.per_key.size(), 10); ++i) {
    top.push_back({{"key", c.per_key[i].key}, {"domains", c.per_key[i].domains}});
  }
  return {{"domains", c.domains},
          {"keys", c.per_key.size()},
          {"top1_share", c.top1_share()},
          {"top_keys", top},
          {"keys_per_domain_cdf", cdf_json(c.keys_per_domain)}};
}

Concentration concentrate(const std::map<std::string, std::set<std::string>>& by_domain) {
  Concentration c;
  std::map<std::string, std::uint64_t> per_key;
  for (const auto& [d, keys] : by_domain) {
    if (keys.empty()) continue;
    ++c.domains;
    c.keys_per_domain.add(static_cast<std::int64_t>(keys.size()));
    for (const auto& k : keys) ++per_key[k];
  }
  for (const auto& [k, n] : per_key) c.per_key.push_back({k, n});
  std::stable_sort(c.per_key.begin(), c.per_key.end(),
                   [](const KeyCount& a, const KeyCount& b) { return a.domains > b.domains; });
  return c;
}

}  // namespace

nlohmann::json ConcentrationReport::to_json() const {
  return {{"cidr", concentration_json(cidr)},
          {"asn", concentration_json(asn)},
          {"country", concentration_json(country)},
          {"ips_per_domain_cdf", cdf_json(ips_per_domain)},
          {"no_route", no_route}};
}

void InfraGraph::add(const ScanHit& hit, const RoutingHistory& routing) {
  if (hit.obs.ips.empty()) return;
  auto& e = domains_[hit.registrable];
  const RoutingSnapshot* snap = routing.closest(hit.obs.date);
  for (const auto& ip : hit.obs.ips) {
    e.ips.insert(ip);
    auto route = snap ? snap->lookup(ip) : std::nullopt;
    if (!route) {
      ++no_route_;
      continue;
    }
    e.cidrs.insert(route->cidr);
    e.asns.insert("AS" + std::to_string(route->asn));
    e.countries.insert(route->country);
  }
}

void InfraGraph::merge(const InfraGraph& other) {
  for (const auto& [d, o] : other.domains_) {
    auto& e = domains_[d];
    e.ips.insert(o.ips.begin(), o.ips.end());
    e.cidrs.insert(o.cidrs.begin(), o.cidrs.end());
    e.asns.insert(o.asns.begin(), o.asns.end());
    e.countries.insert(o.countries.begin(), o.countries.end());
  }
  no_route_ += other.no_route_;
}

ConcentrationReport InfraGraph::report() const {
  ConcentrationReport r;
  std::map<std::string, std::set<std::string>> cidrs, asns, countries;
  for (const auto& [d, e] : domains_) {
    r.ips_per_domain.add(static_cast<std::int64_t>(e.ips.size()));
    cidrs.emplace(d, e.cidrs);
    asns.emplace(d, e.asns);
    countries.emplace(d, e.countries);
  }
  r.cidr = concentrate(cidrs);
  r.asn = concentrate(asns);
  r.country = concentrate(countries);
  r.no_route = no_route_;
  return r;
}

ConcentrationReport concentration_report(std::span<const ScanHit> hits,
                                         const RoutingHistory& routing, const DomainSet* subset) {
  InfraGraph g;
  for (const auto& h : hits) {
    if (!h.has(SquatKind::Combosquatting)) continue;
    if (subset && !subset->contains(h.registrable)) continue;
    g.add(h, routing);
  }
  return g.report();
}

std::vector<CategoryCount> category_counts(const DomainSet& domains,
                                           std::span<const TrademarkSeed> seeds) {
  const auto cats = category_map(seeds);
  std::map<std::string, std::uint64_t, std::less<>> seed_count;
  for (const auto& s : seeds) ++seed_count[s.category];
  std::map<std::string, std::set<std::string>, std::less<>> per_cat;
  for (const auto& [d, ts] : domains.members()) {
    for (const auto& t : ts) {
      if (auto it = cats.find(t); it != cats.end()) per_cat[it->second].insert(d);
    }
  }
  std::vector<CategoryCount> out;
  for (std::string_view name : kBusinessCategories) {
    CategoryCount c;
    c.category = std::string(name);
    if (auto it = per_cat.find(name); it != per_cat.end()) c.domains = it->second.size();
    if (auto it = seed_count.find(name); it != seed_count.end()) c.seeds = it->second;
    c.normalized = c.seeds == 0 ? 0.0 : static_cast<double>(c.domains) / c.seeds;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace squatscope
