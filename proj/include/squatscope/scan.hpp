#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "squatscope/classifier.hpp"
#include "squatscope/domain.hpp"
#include "squatscope/records.hpp"

namespace squatscope {

struct ScanOptions {
  // Also test labels left of the e2LD; only Combosquatting verdicts are taken
  // from them and their spans are relative to the matching label.
  bool subdomains = false;
  // Emit Typosquatting verdicts as well (needed for daily typo counts).
  bool include_typos = false;
};

struct ScanContext {
  const SuffixList& suffixes;
  const SquatMatcher& matcher;
  ScanOptions options{};
};

// One input record together with every verdict of interest for its name.
struct ScanHit {
  DnsObservation obs;
  std::string registrable;  // e2LD + public suffix
  std::vector<SquatVerdict> verdicts;

  bool has(SquatKind kind) const;

  friend bool operator==(const ScanHit&, const ScanHit&) = default;
};

// Scan counters. Every field merges associatively across shards.
struct ScanStats {
  std::uint64_t records_in = 0;
  std::uint64_t records_skipped = 0;  // qname failed to parse
  std::uint64_t matches = 0;          // (record, Combosquatting verdict) pairs
  std::uint64_t typo_matches = 0;     // (record, Typosquatting verdict) pairs, if requested
  StringSet distinct;                 // registrable domains with a Combosquatting verdict
  std::map<std::string, std::uint64_t> per_trademark_counts;  // Combosquatting records

  void merge(const ScanStats& other);
  double skip_rate() const {
    return records_in == 0 ? 0.0 : static_cast<double>(records_skipped) / records_in;
  }
  // {records_in, records_skipped, matches, distinct_e2lds, per_trademark_counts}
  nlohmann::json to_json() const;
};

// Verdicts for a parsed name: the e2LD against every trademark, plus
// Combosquatting hits from subdomain labels when enabled. Unrelated and
// Exact verdicts are dropped, as are Typosquatting ones unless requested.
std::vector<SquatVerdict> name_verdicts(const DomainName& name, const SquatMatcher& matcher,
                                        const ScanOptions& options);

// Per-record step shared by the serial and parallel scans. Returns true and
// fills `hit` when the record carries at least one reportable verdict.
bool scan_record(const DnsObservation& obs, const ScanContext& ctx, ScanHit& hit,
                 ScanStats& stats);

// Serial single-pass scan; hits are appended in input order.
ScanStats scan_stream(std::span<const DnsObservation> records, const ScanContext& ctx,
                      std::vector<ScanHit>& out);

// Flat (record, verdict) view of hits, restricted to one kind.
std::vector<std::pair<const ScanHit*, const SquatVerdict*>> flatten(
    std::span<const ScanHit> hits, SquatKind kind);

// ---- match files -------------------------------------------------------------
//
// One line per hit:
//   source date qname registrable rrtype rdata lookup_count verdicts
// where verdicts is `trademark:K[:start-end]` joined by ';' and K is one of
// C (Combosquatting), T (Typosquatting), E (Exact).

std::string format_hit(const ScanHit& hit, DnsSource source);
std::optional<std::pair<DnsSource, ScanHit>> parse_hit(std::string_view line);

}  // namespace squatscope
