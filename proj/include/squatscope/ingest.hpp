#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "squatscope/dictionary.hpp"
#include "squatscope/records.hpp"

namespace squatscope {

enum class IngestErrc { UnreadableFile, MalformedRow, DuplicateTrademark };

class IngestError : public std::runtime_error {
 public:
  IngestError(IngestErrc code, std::size_t line, const std::string& what)
      : std::runtime_error(what), code_(code), line_(line) {}
  IngestErrc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  IngestErrc code_;
  std::size_t line_;
};

// Soft-error tallies for line-oriented inputs. Comments and blank lines are
// not records.
struct IngestStats {
  std::uint64_t records = 0;
  std::uint64_t skipped = 0;

  IngestStats& operator+=(const IngestStats& o) {
    records += o.records;
    skipped += o.skipped;
    return *this;
  }
};

// ---- seeds ---------------------------------------------------------------

// CSV `trademark,domain,category,rank,origin`; an optional header row whose
// first field is "trademark". Throws IngestError (MalformedRow with its line
// number, DuplicateTrademark). Short and dictionary-word trademarks are
// flagged, not removed.
std::vector<TrademarkSeed> parse_seeds(std::string_view text, const WordList* english);
std::vector<TrademarkSeed> load_seeds(const std::filesystem::path& path, const WordList* english);

std::vector<std::string> trademark_names(const std::vector<TrademarkSeed>& seeds);

// ---- passive / active DNS ------------------------------------------------

struct DnsReadOptions {
  DnsSource source = DnsSource::Passive;
  std::optional<std::pair<Day, Day>> period;  // inclusive; records outside are skipped
};

// Parses one TSV line `date qname rrtype rdata lookup_count?`. Returns false
// for malformed lines. For passive DNS the count is required and positive;
// active DNS carries no volume and always yields 0.
bool parse_dns_line(std::string_view line, const DnsReadOptions& options, DnsObservation& out);

// Streaming reader; memory use is one line at a time.
class DnsFileReader {
 public:
  DnsFileReader(const std::filesystem::path& path, DnsReadOptions options);

  // Next well-formed record; false at end of input.
  bool next(DnsObservation& out);

  // Appends up to max_records records; returns how many were read.
  std::size_t read_batch(std::vector<DnsObservation>& out, std::size_t max_records);

  const IngestStats& stats() const { return stats_; }

 private:
  std::ifstream in_;
  DnsReadOptions options_;
  std::string line_;
  IngestStats stats_;
};

IngestStats ingest_dns(const std::filesystem::path& path, const DnsReadOptions& options,
                       const std::function<void(DnsObservation&&)>& sink);
std::vector<DnsObservation> ingest_pdns(const std::filesystem::path& path,
                                        IngestStats* stats = nullptr);
std::vector<DnsObservation> ingest_adns(const std::filesystem::path& path,
                                        IngestStats* stats = nullptr);

// ---- label feeds -----------------------------------------------------------

// TSV `date domain detail?`. Domains are lowercased with any trailing dot
// removed; duplicate (domain, source, date) rows collapse to one event.
// Output sorted by (domain, date).
std::vector<LabelEvent> parse_labels(std::string_view text, LabelSource source,
                                     IngestStats* stats = nullptr);
std::vector<LabelEvent> ingest_labels(const std::filesystem::path& path, LabelSource source,
                                      IngestStats* stats = nullptr);

// Sorts and removes duplicate (domain, source, date) events, keeping the
// first detail seen.
void dedup_label_events(std::vector<LabelEvent>& events);

// ---- Alexa ranks -----------------------------------------------------------

struct AlexaRow {
  Day date{};
  std::uint32_t rank = 0;
  std::string domain;
};

// CSV `date,rank,domain`.
std::vector<AlexaRow> parse_alexa(std::string_view text, IngestStats* stats = nullptr);
std::vector<AlexaRow> ingest_alexa(const std::filesystem::path& path, IngestStats* stats = nullptr);

struct WhitelistRule {
  std::uint32_t max_rank = 10000;
  // A domain must stay inside the top list for more than 90 consecutive days.
  std::uint32_t min_consecutive_days = 91;
};

// One ALE event per qualifying domain, dated on the day its streak first
// reaches min_consecutive_days.
std::vector<LabelEvent> alexa_whitelist(const std::vector<AlexaRow>& rows,
                                        WhitelistRule rule = {});

// ---- certificate transparency ---------------------------------------------

// JSON lines `{"names": [...], "issuer": "...", "logged_at": "YYYY-MM-DD"}`.
bool parse_cert_line(std::string_view line, CertRecord& out);
std::vector<CertRecord> ingest_certs(const std::filesystem::path& path,
                                     IngestStats* stats = nullptr);

}  // namespace squatscope
