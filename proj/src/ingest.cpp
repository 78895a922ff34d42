#include "squatscope/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "json.hpp"

#include "squatscope/domain.hpp"
#include "squatscope/fileio.hpp"
#include "squatscope/strings.hpp"

namespace squatscope {

namespace {

bool is_skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

template <class Int>
bool parse_uint(std::string_view s, Int& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string normalize_domain(std::string_view d) {
  d = trim(d);
  if (!d.empty() && d.back() == '.') d.remove_suffix(1);
  return to_lower_ascii(d);
}

std::string read_or_throw(const std::filesystem::path& path) {
  try {
    return read_text_file(path);
  } catch (const IoError& e) {
    throw IngestError(IngestErrc::UnreadableFile, 0, e.what());
  }
}

}  // namespace

// ---- seeds ---------------------------------------------------------------

std::vector<TrademarkSeed> parse_seeds(std::string_view text, const WordList* english) {
  std::vector<TrademarkSeed> seeds;
  StringSet seen;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (is_skippable(line)) return;
    auto fields = split(line, ',');
    auto malformed = [&](const std::string& why) {
      throw IngestError(IngestErrc::MalformedRow, lineno,
                        "seed line " + std::to_string(lineno) + ": " + why);
    };
    if (fields.size() != 5) malformed("expected 5 fields, got " + std::to_string(fields.size()));
    if (seeds.empty() && seen.empty() && to_lower_ascii(trim(fields[0])) == "trademark") return;

    TrademarkSeed seed;
    seed.trademark = to_lower_ascii(trim(fields[0]));
    seed.source_domain = normalize_domain(fields[1]);
    if (seed.trademark.size() < 2) malformed("trademark shorter than 2 characters");
    for (char c : seed.trademark) {
      if (!is_label_char(c)) malformed("trademark is not a valid e2LD: " + seed.trademark);
    }
    auto category = canonical_category(fields[2]);
    if (!category) malformed("unknown category '" + std::string(trim(fields[2])) + "'");
    seed.category = std::string(*category);
    if (!trim(fields[3]).empty()) {
      std::uint32_t rank = 0;
      if (!parse_uint(fields[3], rank) || rank == 0) malformed("bad rank");
      seed.alexa_rank = rank;
    }
    auto origin = parse_seed_origin(fields[4]);
    if (!origin) malformed("unknown origin '" + std::string(trim(fields[4])) + "'");
    seed.origin = *origin;

    if (!seen.insert(seed.trademark).second) {
      throw IngestError(IngestErrc::DuplicateTrademark, lineno,
                        "seed line " + std::to_string(lineno) + ": duplicate trademark " +
                            seed.trademark);
    }
    seed.flag_short = seed.trademark.size() < 4;
    seed.flag_dictionary_word = english && english->contains(seed.trademark);
    seeds.push_back(std::move(seed));
  });
  return seeds;
}

std::vector<TrademarkSeed> load_seeds(const std::filesystem::path& path, const WordList* english) {
  return parse_seeds(read_or_throw(path), english);
}

std::vector<std::string> trademark_names(const std::vector<TrademarkSeed>& seeds) {
  std::vector<std::string> out;
  out.reserve(seeds.size());
  for (const auto& s : seeds) out.push_back(s.trademark);
  return out;
}

// ---- DNS -----------------------------------------------------------------

bool parse_dns_line(std::string_view line, const DnsReadOptions& options, DnsObservation& out) {
  auto fields = split(line, '\t');
  if (fields.size() < 4 || fields.size() > 5) return false;
  auto date = parse_iso_date(trim(fields[0]));
  if (!date) return false;
  if (options.period && (*date < options.period->first || *date > options.period->second)) {
    return false;
  }
  std::string_view qname = trim(fields[1]);
  std::string_view rrtype = trim(fields[2]);
  std::string_view rdata = trim(fields[3]);
  if (qname.empty() || rrtype.empty()) return false;

  std::uint64_t count = 0;
  if (options.source == DnsSource::Passive) {
    if (fields.size() != 5 || !parse_uint(fields[4], count) || count == 0) return false;
  }

  out.date = *date;
  out.qname.assign(qname);
  out.rrtype.assign(rrtype);
  for (char& c : out.rrtype) c = static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
  out.rdata.assign(rdata);
  out.ips.clear();
  if (out.rrtype == "A" || out.rrtype == "AAAA") {
    for (auto part : split(rdata, ',')) {
      auto ip = IpAddress::parse(trim(part));
      if (!ip) return false;
      out.ips.push_back(*ip);
    }
    std::sort(out.ips.begin(), out.ips.end());
    out.ips.erase(std::unique(out.ips.begin(), out.ips.end()), out.ips.end());
  }
  out.lookup_count = count;
  return true;
}

DnsFileReader::DnsFileReader(const std::filesystem::path& path, DnsReadOptions options)
    : in_(path), options_(options) {
  if (!in_) throw IngestError(IngestErrc::UnreadableFile, 0, "cannot open " + path.string());
}

bool DnsFileReader::next(DnsObservation& out) {
  while (std::getline(in_, line_)) {
    if (!line_.empty() && line_.back() == '\r') line_.pop_back();
    if (is_skippable(line_)) continue;
    if (parse_dns_line(line_, options_, out)) {
      ++stats_.records;
      return true;
    }
    ++stats_.skipped;
  }
  return false;
}

std::size_t DnsFileReader::read_batch(std::vector<DnsObservation>& out, std::size_t max_records) {
  std::size_t n = 0;
  DnsObservation obs;
  while (n < max_records && next(obs)) {
    out.push_back(std::move(obs));
    ++n;
  }
  return n;
}

IngestStats ingest_dns(const std::filesystem::path& path, const DnsReadOptions& options,
                       const std::function<void(DnsObservation&&)>& sink) {
  DnsFileReader reader(path, options);
  DnsObservation obs;
  while (reader.next(obs)) sink(std::move(obs));
  return reader.stats();
}

namespace {

std::vector<DnsObservation> ingest_all(const std::filesystem::path& path, DnsSource source,
                                       IngestStats* stats) {
  std::vector<DnsObservation> out;
  IngestStats s = ingest_dns(path, {source, std::nullopt},
                             [&](DnsObservation&& o) { out.push_back(std::move(o)); });
  if (stats) *stats = s;
  return out;
}

}  // namespace

std::vector<DnsObservation> ingest_pdns(const std::filesystem::path& path, IngestStats* stats) {
  return ingest_all(path, DnsSource::Passive, stats);
}

std::vector<DnsObservation> ingest_adns(const std::filesystem::path& path, IngestStats* stats) {
  return ingest_all(path, DnsSource::Active, stats);
}

// ---- labels ----------------------------------------------------------------

void dedup_label_events(std::vector<LabelEvent>& events) {
  auto key = [](const LabelEvent& e) { return std::tie(e.domain, e.source, e.date); };
  std::stable_sort(events.begin(), events.end(),
                   [&](const LabelEvent& a, const LabelEvent& b) { return key(a) < key(b); });
  events.erase(std::unique(events.begin(), events.end(),
                           [&](const LabelEvent& a, const LabelEvent& b) {
                             return key(a) == key(b);
                           }),
               events.end());
}

std::vector<LabelEvent> parse_labels(std::string_view text, LabelSource source,
                                     IngestStats* stats) {
  std::vector<LabelEvent> events;
  IngestStats local;
  for_each_line(text, [&](std::size_t, std::string_view line) {
    if (is_skippable(line)) return;
    auto fields = split(line, '\t');
    std::optional<Day> date;
    if (fields.size() >= 2 && fields.size() <= 3) date = parse_iso_date(trim(fields[0]));
    std::string domain = date ? normalize_domain(fields[1]) : std::string{};
    if (!date || domain.empty()) {
      ++local.skipped;
      return;
    }
    ++local.records;
    events.push_back(LabelEvent{std::move(domain), source, *date,
                                fields.size() == 3 ? std::string(trim(fields[2])) : std::string{}});
  });
  dedup_label_events(events);
  if (stats) *stats = local;
  return events;
}

std::vector<LabelEvent> ingest_labels(const std::filesystem::path& path, LabelSource source,
                                      IngestStats* stats) {
  return parse_labels(read_or_throw(path), source, stats);
}

// ---- Alexa -----------------------------------------------------------------

std::vector<AlexaRow> parse_alexa(std::string_view text, IngestStats* stats) {
  std::vector<AlexaRow> rows;
  IngestStats local;
  for_each_line(text, [&](std::size_t, std::string_view line) {
    if (is_skippable(line)) return;
    auto fields = split(line, ',');
    if (fields.size() == 3 && trim(fields[0]) == "date") return;  // header
    AlexaRow row;
    std::optional<Day> date;
    if (fields.size() == 3) date = parse_iso_date(trim(fields[0]));
    if (!date || !parse_uint(fields[1], row.rank) || row.rank == 0 ||
        normalize_domain(fields[2]).empty()) {
      ++local.skipped;
      return;
    }
    ++local.records;
    row.date = *date;
    row.domain = normalize_domain(fields[2]);
    rows.push_back(std::move(row));
  });
  if (stats) *stats = local;
  return rows;
}

std::vector<AlexaRow> ingest_alexa(const std::filesystem::path& path, IngestStats* stats) {
  return parse_alexa(read_or_throw(path), stats);
}

std::vector<LabelEvent> alexa_whitelist(const std::vector<AlexaRow>& rows, WhitelistRule rule) {
  std::map<std::string, std::vector<Day>> days_in_top;
  for (const auto& r : rows) {
    if (r.rank <= rule.max_rank) days_in_top[r.domain].push_back(r.date);
  }
  std::vector<LabelEvent> events;
  for (auto& [domain, days] : days_in_top) {
    std::sort(days.begin(), days.end());
    days.erase(std::unique(days.begin(), days.end()), days.end());
    std::uint32_t run = 0;
    for (std::size_t i = 0; i < days.size(); ++i) {
      run = (i > 0 && days_between(days[i - 1], days[i]) == 1) ? run + 1 : 1;
      if (run == rule.min_consecutive_days) {
        events.push_back(LabelEvent{domain, LabelSource::ALE, days[i], "top" +
                                    std::to_string(rule.max_rank)});
        break;
      }
    }
  }
  return events;
}

// ---- certificates ----------------------------------------------------------

bool parse_cert_line(std::string_view line, CertRecord& out) {
  auto j = nlohmann::json::parse(line.begin(), line.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) return false;
  auto names = j.find("names");
  auto issuer = j.find("issuer");
  auto logged = j.find("logged_at");
  if (names == j.end() || !names->is_array() || names->empty()) return false;
  if (issuer == j.end() || !issuer->is_string()) return false;
  if (logged == j.end() || !logged->is_string()) return false;
  auto date = parse_iso_date(logged->get_ref<const std::string&>());
  if (!date) return false;
  out.names.clear();
  for (const auto& n : *names) {
    if (!n.is_string()) return false;
    out.names.push_back(normalize_domain(n.get_ref<const std::string&>()));
  }
  out.issuer = issuer->get<std::string>();
  out.logged_at = *date;
  return true;
}

std::vector<CertRecord> ingest_certs(const std::filesystem::path& path, IngestStats* stats) {
  std::vector<CertRecord> certs;
  IngestStats local;
  for_each_line(read_or_throw(path), [&](std::size_t, std::string_view line) {
    if (is_skippable(line)) return;
    CertRecord rec;
    if (parse_cert_line(line, rec)) {
      ++local.records;
      certs.push_back(std::move(rec));
    } else {
      ++local.skipped;
    }
  });
  if (stats) *stats = local;
  return certs;
}

}  // namespace squatscope
