#include "squatscope/scan.hpp"

#include <algorithm>
#include <charconv>

namespace squatscope {

bool ScanHit::has(SquatKind kind) const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [&](const SquatVerdict& v) { return v.kind == kind; });
}

void ScanStats::merge(const ScanStats& other) {
  records_in += other.records_in;
  records_skipped += other.records_skipped;
  matches += other.matches;
  typo_matches += other.typo_matches;
  distinct.insert(other.distinct.begin(), other.distinct.end());
  for (const auto& [t, n] : other.per_trademark_counts) per_trademark_counts[t] += n;
}

nlohmann::json ScanStats::to_json() const {
  nlohmann::json j;
  j["records_in"] = records_in;
  j["records_skipped"] = records_skipped;
  j["matches"] = matches;
  j["typo_matches"] = typo_matches;
  j["distinct_e2lds"] = distinct.size();
  j["per_trademark_counts"] = per_trademark_counts;
  return j;
}

std::vector<SquatVerdict> name_verdicts(const DomainName& name, const SquatMatcher& matcher,
                                        const ScanOptions& options) {
  std::vector<SquatVerdict> out = matcher.classify_multi(name.e2ld);
  std::erase_if(out, [&](const SquatVerdict& v) {
    return v.kind == SquatKind::Unrelated || v.kind == SquatKind::Exact ||
           (v.kind == SquatKind::Typosquatting && !options.include_typos);
  });
  if (options.subdomains && name.labels.size() > 1) {
    for (std::size_t i = name.labels.size() - 1; i-- > 0;) {
      for (auto& v : matcher.classify_multi(name.labels[i])) {
        if (v.kind != SquatKind::Combosquatting) continue;
        auto same = [&](const SquatVerdict& o) { return o.trademark == v.trademark; };
        if (std::none_of(out.begin(), out.end(), same)) out.push_back(std::move(v));
      }
    }
    std::stable_sort(out.begin(), out.end(), [](const SquatVerdict& a, const SquatVerdict& b) {
      return a.trademark < b.trademark;
    });
  }
  return out;
}

bool scan_record(const DnsObservation& obs, const ScanContext& ctx, ScanHit& hit,
                 ScanStats& stats) {
  ++stats.records_in;
  auto name = try_parse_domain(obs.qname, ctx.suffixes);
  if (!name) {
    ++stats.records_skipped;
    return false;
  }
  auto verdicts = name_verdicts(*name, ctx.matcher, ctx.options);
  if (verdicts.empty()) return false;

  std::string registrable = name->registrable();
  bool combo = false;
  for (const auto& v : verdicts) {
    if (v.kind == SquatKind::Combosquatting) {
      ++stats.matches;
      ++stats.per_trademark_counts[v.trademark];
      combo = true;
    } else if (v.kind == SquatKind::Typosquatting) {
      ++stats.typo_matches;
    }
  }
  if (combo) stats.distinct.insert(registrable);
  hit.obs = obs;
  hit.registrable = std::move(registrable);
  hit.verdicts = std::move(verdicts);
  return true;
}

ScanStats scan_stream(std::span<const DnsObservation> records, const ScanContext& ctx,
                      std::vector<ScanHit>& out) {
  ScanStats stats;
  ScanHit hit;
  for (const auto& obs : records) {
    if (scan_record(obs, ctx, hit, stats)) out.push_back(std::move(hit));
  }
  return stats;
}

std::vector<std::pair<const ScanHit*, const SquatVerdict*>> flatten(
    std::span<const ScanHit> hits, SquatKind kind) {
  std::vector<std::pair<const ScanHit*, const SquatVerdict*>> out;
  for (const auto& h : hits) {
    for (const auto& v : h.verdicts) {
      if (v.kind == kind) out.emplace_back(&h, &v);
    }
  }
  return out;
}

// ---- match files -------------------------------------------------------------

namespace {

char kind_code(SquatKind k) {
  switch (k) {
    case SquatKind::Combosquatting: return 'C';
    case SquatKind::Typosquatting: return 'T';
    case SquatKind::Exact: return 'E';
    case SquatKind::Unrelated: return 'U';
  }
  return 'U';
}

std::optional<SquatKind> kind_from_code(std::string_view c) {
  if (c == "C") return SquatKind::Combosquatting;
  if (c == "T") return SquatKind::Typosquatting;
  if (c == "E") return SquatKind::Exact;
  return std::nullopt;
}

template <class Int>
bool to_uint(std::string_view s, Int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace

std::string format_hit(const ScanHit& hit, DnsSource source) {
  std::string line;
  line.reserve(128);
  line += to_string(source);
  line += '\t';
  line += format_iso_date(hit.obs.date);
  line += '\t';
  line += hit.obs.qname;
  line += '\t';
  line += hit.registrable;
  line += '\t';
  line += hit.obs.rrtype;
  line += '\t';
  line += hit.obs.rdata;
  line += '\t';
  line += std::to_string(hit.obs.lookup_count);
  line += '\t';
  for (std::size_t i = 0; i < hit.verdicts.size(); ++i) {
    const auto& v = hit.verdicts[i];
    if (i) line += ';';
    line += v.trademark;
    line += ':';
    line += kind_code(v.kind);
    if (v.match_span) {
      line += ':';
      line += std::to_string(v.match_span->start);
      line += '-';
      line += std::to_string(v.match_span->end);
    }
  }
  return line;
}

std::optional<std::pair<DnsSource, ScanHit>> parse_hit(std::string_view line) {
  auto f = split(line, '\t');
  if (f.size() != 8) return std::nullopt;
  DnsSource source;
  if (f[0] == "pdns") {
    source = DnsSource::Passive;
  } else if (f[0] == "adns") {
    source = DnsSource::Active;
  } else {
    return std::nullopt;
  }
  auto date = parse_iso_date(f[1]);
  if (!date) return std::nullopt;
  ScanHit hit;
  hit.obs.date = *date;
  hit.obs.qname = std::string(f[2]);
  hit.registrable = std::string(f[3]);
  hit.obs.rrtype = std::string(f[4]);
  hit.obs.rdata = std::string(f[5]);
  if (!to_uint(f[6], hit.obs.lookup_count)) return std::nullopt;
  if (hit.obs.rrtype == "A" || hit.obs.rrtype == "AAAA") {
    for (auto part : split(f[5], ',')) {
      auto ip = IpAddress::parse(part);
      if (!ip) return std::nullopt;
      hit.obs.ips.push_back(*ip);
    }
    std::sort(hit.obs.ips.begin(), hit.obs.ips.end());
    hit.obs.ips.erase(std::unique(hit.obs.ips.begin(), hit.obs.ips.end()), hit.obs.ips.end());
  }
  if (f[7].empty()) return std::nullopt;
  for (auto item : split(f[7], ';')) {
    auto parts = split(item, ':');
    if (parts.size() < 2 || parts.size() > 3 || parts[0].empty()) return std::nullopt;
    auto kind = kind_from_code(parts[1]);
    if (!kind) return std::nullopt;
    SquatVerdict v{*kind, std::string(parts[0]), std::nullopt};
    if (parts.size() == 3) {
      auto dash = parts[2].find('-');
      Span s;
      if (dash == std::string_view::npos || !to_uint(parts[2].substr(0, dash), s.start) ||
          !to_uint(parts[2].substr(dash + 1), s.end)) {
        return std::nullopt;
      }
      v.match_span = s;
    }
    hit.verdicts.push_back(std::move(v));
  }
  return std::make_pair(source, std::move(hit));
}

}  // namespace squatscope
