#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"

#include "reports.hpp"
#include "squatscope/analytics.hpp"
#include "squatscope/certs.hpp"
#include "squatscope/classifier.hpp"
#include "squatscope/dictionary.hpp"
#include "squatscope/domain.hpp"
#include "squatscope/fileio.hpp"
#include "squatscope/ingest.hpp"
#include "squatscope/kernels.hpp"
#include "squatscope/keyboard.hpp"
#include "squatscope/lexical.hpp"
#include "squatscope/routing.hpp"
#include "squatscope/scan.hpp"
#include "squatscope/segment.hpp"
#include "squatscope/sets.hpp"
#include "squatscope/typo.hpp"

namespace squatscope::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kBatchRecords = 1 << 18;

fs::path data_file(const char* rel) { return fs::path(SQUATSCOPE_DATA_DIR) / rel; }

// Everything the matching commands share.
struct Engine {
  SuffixList suffixes;
  Keyboard keyboard;
  DictionarySet dicts;
  std::vector<TrademarkSeed> seeds;
  std::unique_ptr<SquatMatcher> matcher;
  ScanOptions options;

  explicit Engine(const RunConfig& cfg)
      : suffixes(SuffixList::from_file(cfg.suffix_path)),
        keyboard(cfg.keyboard_path.empty() ? Keyboard::qwerty()
                                           : Keyboard::from_file(cfg.keyboard_path)) {
    for (const auto& p : cfg.dictionary_paths) {
      dicts.add(WordList::from_file(p, p.stem().string()));
    }
    seeds = load_seeds(cfg.seed_path, dicts.find("english"));
    matcher = std::make_unique<SquatMatcher>(trademark_names(seeds), keyboard);
    options.subdomains = cfg.subdomain_matching;
    options.include_typos = cfg.typos;
  }

  ScanContext context() const { return {suffixes, *matcher, options}; }
};

struct Matches {
  std::vector<ScanHit> pdns, adns;

  std::vector<ScanHit> all() const {
    std::vector<ScanHit> out = pdns;
    out.insert(out.end(), adns.begin(), adns.end());
    return out;
  }
};

Matches load_matches(const RunConfig& cfg) {
  const fs::path path = cfg.out_dir / "matches.tsv";
  if (!fs::exists(path)) throw UsageError(path.string() + " not found; run `scan` first");
  Matches m;
  for_each_line(read_text_file(path), [&](std::size_t lineno, std::string_view line) {
    if (line.empty()) return;
    auto parsed = parse_hit(line);
    if (!parsed) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": malformed match line");
    }
    auto& dst = parsed->first == DnsSource::Passive ? m.pdns : m.adns;
    dst.push_back(std::move(parsed->second));
  });
  return m;
}

std::vector<LabelEvent> load_labels(const RunConfig& cfg) {
  std::vector<LabelEvent> events;
  auto add = [&](const fs::path& p, LabelSource src) {
    if (p.empty()) return;
    auto ev = ingest_labels(p, src);
    events.insert(events.end(), ev.begin(), ev.end());
  };
  add(cfg.mal, LabelSource::MAL);
  add(cfg.pbl, LabelSource::PBL);
  add(cfg.apt, LabelSource::APT);
  add(cfg.spa, LabelSource::SPA);
  if (!cfg.ale.empty()) {
    add(cfg.ale, LabelSource::ALE);
  } else if (!cfg.alexa.empty()) {
    auto ev = alexa_whitelist(ingest_alexa(cfg.alexa));
    events.insert(events.end(), ev.begin(), ev.end());
  }
  return events;
}

void check_skip_rate(const RunConfig& cfg, std::uint64_t bad, std::uint64_t total,
                     std::string_view what) {
  if (total == 0) return;
  const double rate = static_cast<double>(bad) / static_cast<double>(total);
  if (rate > cfg.max_skip_rate) {
    throw DataError(std::string(what) + ": skipped " + std::to_string(bad) + " of " +
                    std::to_string(total) + " records (" + num(rate) + ") exceeds --max-skip-rate " +
                    num(cfg.max_skip_rate));
  }
}

// ---- commands ----------------------------------------------------------------

int cmd_validate_seeds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  DictionarySet dicts;
  for (const auto& p : cfg.dictionary_paths) dicts.add(WordList::from_file(p, p.stem().string()));
  const auto seeds = load_seeds(cfg.seed_path, dicts.find("english"));
  std::size_t flagged = 0;
  for (const auto& s : seeds) {
    if (!s.flagged()) continue;
    ++flagged;
    std::string why;
    if (s.flag_short) why = "short";
    if (s.flag_dictionary_word) why += why.empty() ? "dictionary-word" : ",dictionary-word";
    out << s.trademark << '\t' << s.category << '\t' << why << '\n';
  }
  err << seeds.size() << " seeds, " << flagged << " flagged for review\n";
  return kOk;
}

int cmd_gen_typos(const RunConfig& cfg, const std::string& trademark, bool all,
                  std::ostream& out) {
  const Keyboard kb =
      cfg.keyboard_path.empty() ? Keyboard::qwerty() : Keyboard::from_file(cfg.keyboard_path);
  fs::create_directories(cfg.out_dir);
  if (all) {
    const auto seeds = load_seeds(cfg.seed_path, nullptr);
    const auto names = trademark_names(seeds);
    const auto bound = typo_upper_bound_parallel(names, kb, cfg.threads);
    Csv csv{"trademark", "variants"};
    for (const auto& [t, n] : bound.per_trademark) csv.row({t, std::to_string(n)});
    write_file(cfg.out_dir / "typo_bound.csv", csv.str());
    out << "trademarks\t" << names.size() << "\nunion\t" << bound.total << '\n';
    return kOk;
  }
  if (trademark.empty()) throw UsageError("gen-typos needs a TRADEMARK or --all");
  const auto set = generate_typos(to_lower_ascii(trademark), kb);
  std::string text;
  for (const auto& v : set.variants) text += v + '\n';
  write_file(cfg.out_dir / ("typos_" + set.trademark + ".txt"), text);
  for (auto m : kAllTypoModels) out << to_string(m) << '\t' << set.count(m) << '\n';
  out << "distinct\t" << set.variants.size() << '\n';
  return kOk;
}

int cmd_classify(const RunConfig& cfg, const std::string& domain, std::ostream& out) {
  Engine engine(cfg);
  DomainErrc code{};
  auto name = try_parse_domain(domain, engine.suffixes, &code);
  if (!name) throw UsageError("cannot parse domain '" + domain + "'");
  for (const auto& v : classify_multi(name->e2ld, *engine.matcher)) {
    if (v.kind == SquatKind::Unrelated) continue;
    out << v.trademark << ' ' << to_string(v.kind) << '\n';
  }
  if (cfg.subdomain_matching) {
    for (std::size_t i = 0; i < name->labels.size(); ++i) {
      for (const auto& v : classify_multi(name->labels[i], *engine.matcher)) {
        if (v.kind == SquatKind::Combosquatting) {
          out << v.trademark << ' ' << to_string(v.kind) << " (label " << name->labels[i] << ")\n";
        }
      }
    }
  }
  return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  if (cfg.pdns.empty() && cfg.adns.empty()) throw UsageError("scan needs --pdns and/or --adns");
  Engine engine(cfg);
  const auto ctx = engine.context();
  fs::create_directories(cfg.out_dir);

  std::vector<std::string> lines;
  nlohmann::json stats_json = nlohmann::json::object();
  std::uint64_t bad = 0, total = 0;

  auto run = [&](const std::vector<fs::path>& files, DnsSource source) {
    if (files.empty()) return;
    ScanStats stats;
    IngestStats ingest;
    std::vector<DnsObservation> batch;
    std::vector<ScanHit> hits;
    for (const auto& path : files) {
      DnsFileReader reader(path, {source, std::nullopt});
      while (reader.read_batch(batch, kBatchRecords) > 0) {
        hits.clear();
        stats.merge(scan_parallel(batch, ctx, hits, cfg.shard_count, cfg.threads));
        for (const auto& h : hits) lines.push_back(format_hit(h, source));
        batch.clear();
      }
      ingest += reader.stats();
    }
    auto j = stats.to_json();
    j["lines_malformed"] = ingest.skipped;
    stats_json[to_string(source)] = j;
    bad += ingest.skipped + stats.records_skipped;
    total += ingest.records + ingest.skipped;
  };
  run(cfg.pdns, DnsSource::Passive);
  run(cfg.adns, DnsSource::Active);

  write_json(cfg.out_dir / "scan_stats.json", stats_json);
  std::error_code ec;
  fs::remove(cfg.out_dir / "matches.tsv", ec);
  check_skip_rate(cfg, bad, total, "scan");

  std::sort(lines.begin(), lines.end());
  std::string text;
  for (const auto& l : lines) {
    text += l;
    text += '\n';
  }
  write_file(cfg.out_dir / "matches.tsv", text);
  out << lines.size() << " matching records\n";
  return kOk;
}

DerivedSets derive(const Engine& engine, const RunConfig& cfg, const Matches& m) {
  const auto labels = load_labels(cfg);
  auto ctx = engine.context();
  auto sets = derive_sets(m.pdns, m.adns, labels, ctx);
  check_skip_rate(cfg, sets.labels_skipped, sets.labels_in, "labels");
  return sets;
}

int cmd_derive_sets(const RunConfig& cfg, std::ostream& out) {
  Engine engine(cfg);
  const auto m = load_matches(cfg);
  const auto sets = derive(engine, cfg, m);
  write_sets(cfg.out_dir, sets, engine.seeds);
  out << "CP " << sets.cp.size() << ", CA " << sets.ca.size() << ", C_abuse "
      << sets.c_abuse.size() << '\n';
  return kOk;
}

int report_lexical(const RunConfig& cfg, const Engine& engine, const Matches& m) {
  const auto model = UnigramModel::from_file(cfg.unigram_path);
  const auto cats = category_map(engine.seeds);
  std::vector<LexicalEntry> entries;
  for (const auto* hits : {&m.pdns, &m.adns}) {
    for (const auto& h : *hits) {
      auto name = try_parse_domain(h.registrable, engine.suffixes);
      if (!name) continue;
      for (const auto& v : h.verdicts) {
        if (v.kind != SquatKind::Combosquatting) continue;
        // Subdomain-only hits do not contain the trademark in the e2LD.
        if (name->e2ld.find(v.trademark) == std::string::npos) continue;
        auto it = cats.find(v.trademark);
        entries.push_back({name->e2ld, v.trademark, it == cats.end() ? "" : it->second});
      }
    }
  }
  const auto stats = lexical_report_parallel(std::move(entries), model, engine.dicts, cfg.threads);
  write_lexical(cfg.out_dir, stats, cfg.top_k);
  return kOk;
}

int report_temporal(const RunConfig& cfg, const Engine& engine, const Matches& m) {
  const auto sets = derive(engine, cfg, m);
  const auto timelines = build_timelines(m.pdns);
  const auto all = m.all();
  std::optional<std::vector<AlexaRow>> alexa;
  if (!cfg.alexa.empty()) {
    alexa.emplace();
    for (auto row : ingest_alexa(cfg.alexa)) {
      auto name = try_parse_domain(row.domain, engine.suffixes);
      if (!name) continue;
      row.domain = name->registrable();
      alexa->push_back(std::move(row));
    }
  }
  write_temporal(cfg.out_dir, {timelines, sets, all, engine.seeds, alexa ? &*alexa : nullptr});
  return kOk;
}

RoutingHistory load_routing(const RunConfig& cfg) {
  RoutingHistory history;
  for (const auto& spec : cfg.routing) {
    auto eq = spec.find('=');
    std::optional<Day> date;
    if (eq != std::string::npos) date = parse_iso_date(std::string_view(spec).substr(0, eq));
    if (date) {
      history.add(*date, RoutingSnapshot::from_file(spec.substr(eq + 1)));
    } else {
      history.add_undated(RoutingSnapshot::from_file(spec));
    }
  }
  return history;
}

int report_infra(const RunConfig& cfg, const Engine& engine, const Matches& m) {
  if (cfg.routing.empty()) throw UsageError("report --kind infra needs --routing");
  const auto history = load_routing(cfg);
  const auto sets = derive(engine, cfg, m);
  const auto all = m.all();
  write_infra(cfg.out_dir, concentration_report(all, history),
              concentration_report(all, history, &sets.c_abuse));
  return kOk;
}

int cmd_certs(const RunConfig& cfg) {
  if (cfg.certs.empty()) throw UsageError("certificate scan needs --certs");
  Engine engine(cfg);
  IngestStats ingest;
  const auto certs = ingest_certs(cfg.certs, &ingest);
  check_skip_rate(cfg, ingest.skipped, ingest.records + ingest.skipped, "certs");
  fs::create_directories(cfg.out_dir);
  write_certs(cfg.out_dir, cert_scan(certs, engine.context()), ingest);
  return kOk;
}

int cmd_report(const RunConfig& cfg, const std::string& kind) {
  if (kind == "certs") return cmd_certs(cfg);
  Engine engine(cfg);
  const auto m = load_matches(cfg);
  if (kind == "lexical") return report_lexical(cfg, engine, m);
  if (kind == "temporal") return report_temporal(cfg, engine, m);
  if (kind == "infra") return report_infra(cfg, engine, m);
  write_sets(cfg.out_dir, derive(engine, cfg, m), engine.seeds);
  return kOk;
}

void check_paths(const RunConfig& cfg) {
  auto need = [](const fs::path& p, const char* what) {
    if (!p.empty() && !fs::exists(p)) {
      throw UsageError(std::string(what) + " not found: " + p.string());
    }
  };
  need(cfg.seed_path, "--seeds");
  need(cfg.suffix_path, "--suffixes");
  need(cfg.keyboard_path, "--keyboard");
  need(cfg.unigram_path, "--unigrams");
  for (const auto& p : cfg.dictionary_paths) need(p, "--dict");
  for (const auto& p : cfg.pdns) need(p, "--pdns");
  for (const auto& p : cfg.adns) need(p, "--adns");
  need(cfg.mal, "--mal");
  need(cfg.pbl, "--pbl");
  need(cfg.apt, "--apt");
  need(cfg.spa, "--spa");
  need(cfg.ale, "--ale");
  need(cfg.alexa, "--alexa");
  need(cfg.certs, "--certs");
  if (cfg.shard_count == 0) throw UsageError("--shards must be at least 1");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.seed_path = data_file("seeds.csv");
  cfg.suffix_path = data_file("public_suffix_list.dat");
  cfg.keyboard_path = data_file("keyboard_qwerty.txt");
  cfg.unigram_path = data_file("unigrams.tsv");
  cfg.dictionary_paths = {data_file("dict/english.txt"), data_file("dict/profanity.txt"),
                          data_file("dict/scrabble.txt"), data_file("dict/slang.txt")};

  CLI::App app{"squatscope: combosquatting detection and measurement"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "INI/TOML file mirroring the long flags; flags win")
      ->envname("SQUATSCOPE_CONFIG");

  app.add_option("--seeds", cfg.seed_path, "Trademark seed CSV")->capture_default_str();
  app.add_option("--suffixes", cfg.suffix_path, "Public suffix list")->capture_default_str();
  app.add_option("--keyboard", cfg.keyboard_path, "Keyboard adjacency map")->capture_default_str();
  app.add_option("--dict", cfg.dictionary_paths, "Word list (name = file stem); repeatable");
  app.add_option("--unigrams", cfg.unigram_path, "Unigram model TSV")->capture_default_str();
  app.add_option("--pdns", cfg.pdns, "Passive DNS TSV; repeatable");
  app.add_option("--adns", cfg.adns, "Active DNS TSV; repeatable");
  app.add_option("--mal", cfg.mal, "Malware label feed");
  app.add_option("--pbl", cfg.pbl, "Public blacklist label feed");
  app.add_option("--apt", cfg.apt, "APT report label feed");
  app.add_option("--spa", cfg.spa, "Spam-trap label feed");
  app.add_option("--ale", cfg.ale, "Whitelist label feed (overrides --alexa derivation)");
  app.add_option("--alexa", cfg.alexa, "Alexa rank CSV");
  app.add_option("--routing", cfg.routing, "Routing snapshot [YYYY-MM-DD=]PATH; repeatable");
  app.add_option("--certs", cfg.certs, "Certificate JSON lines");
  app.add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
  app.add_flag("--subdomains", cfg.subdomain_matching, "Also match labels left of the e2LD");
  app.add_flag("--typos", cfg.typos, "Keep typosquatting verdicts in scan output");
  app.add_option("--shards", cfg.shard_count, "Shards per scan batch")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "OpenMP threads (0 = default)");
  app.add_option("--max-skip-rate", cfg.max_skip_rate, "Fail when more records are skipped")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--top-k", cfg.top_k, "Top words per category")->capture_default_str();

  auto* validate = app.add_subcommand("validate-seeds", "Load seeds and list flagged rows");

  std::string trademark;
  bool all_seeds = false;
  auto* gen = app.add_subcommand("gen-typos", "Enumerate typosquatting variants");
  gen->add_option("trademark", trademark, "Trademark e2LD");
  gen->add_flag("--all", all_seeds, "Union over every seed instead");

  std::string domain;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one domain against the seeds");
  classify_cmd->add_option("domain", domain, "Domain name")->required();

  auto* scan = app.add_subcommand("scan", "Scan DNS records into matches.tsv");
  auto* derive_cmd = app.add_subcommand("derive-sets", "Build CP/CA and labelled sets");

  std::string kind;
  auto* report = app.add_subcommand("report", "Write CSV/JSON report artifacts");
  report->add_option("--kind", kind, "Report kind")
      ->required()
      ->check(CLI::IsMember({"lexical", "temporal", "infra", "sets", "certs"}));

  auto* certs = app.add_subcommand("cert-scan", "Count squatting names in certificates");

  if (const char* env = std::getenv("SQUATSCOPE_CONFIG"); env && *env && !fs::exists(env)) {
    err << "error: SQUATSCOPE_CONFIG points to missing file " << env << '\n';
    return kUsage;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    check_paths(cfg);
    if (*validate) return cmd_validate_seeds(cfg, out, err);
    if (*gen) return cmd_gen_typos(cfg, trademark, all_seeds, out);
    if (*classify_cmd) return cmd_classify(cfg, domain, out);
    if (*scan) return cmd_scan(cfg, out);
    if (*derive_cmd) return cmd_derive_sets(cfg, out);
    if (*report) return cmd_report(cfg, kind);
    if (*certs) return cmd_certs(cfg);
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const RankOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace squatscope::cli
