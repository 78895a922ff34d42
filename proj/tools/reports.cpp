#include "reports.hpp"

#include <cstdio>

#include "squatscope/fileio.hpp"

namespace squatscope::cli {

namespace fs = std::filesystem;

Csv::Csv(std::initializer_list<std::string_view> header) {
  bool first = true;
  for (auto h : header) {
    append(h, first);
    first = false;
  }
  text_ += '\n';
}

void Csv::row(std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    append(f, first);
    first = false;
  }
  text_ += '\n';
}

void Csv::append(std::string_view field, bool first) {
  if (!first) text_ += ',';
  if (field.find_first_of(",\"\n") == std::string_view::npos) {
    text_ += field;
    return;
  }
  text_ += '"';
  for (char c : field) {
    if (c == '"') text_ += '"';
    text_ += c;
  }
  text_ += '"';
}

std::string num(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

void write_file(const fs::path& path, std::string_view text) { write_text_file(path, text); }

void write_json(const fs::path& path, const nlohmann::json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }

void cdf_rows(Csv& csv, std::string_view label, const ValueCounts& counts) {
  for (const auto& p : counts.cdf()) csv.row({std::string(label), str(p.x), num(p.fraction)});
}

void cdf_rows(Csv& csv, std::string_view a, std::string_view b, const ValueCounts& counts) {
  for (const auto& p : counts.cdf()) {
    csv.row({std::string(a), std::string(b), str(p.x), num(p.fraction)});
  }
}

double fraction_above(const ValueCounts& counts, std::int64_t threshold) {
  if (counts.empty()) return 0.0;
  std::uint64_t n = 0;
  for (const auto& [v, c] : counts.counts()) {
    if (v > threshold) n += c;
  }
  return static_cast<double>(n) / static_cast<double>(counts.total());
}

}  // namespace

void write_sets(const fs::path& dir, const DerivedSets& sets, std::span<const TrademarkSeed> seeds) {
  std::string members;
  auto dump = [&](std::string_view name, const DomainSet& s) {
    for (const auto& [domain, tms] : s.members()) {
      members += name;
      members += '\t';
      members += domain;
      members += '\t';
      bool first = true;
      for (const auto& t : tms) {
        if (!first) members += ';';
        members += t;
        first = false;
      }
      members += '\n';
    }
  };
  dump("CP", sets.cp);
  dump("CA", sets.ca);
  dump("C_mal", sets.c_mal);
  dump("C_pbl", sets.c_pbl);
  dump("C_apt", sets.c_apt);
  dump("C_spa", sets.c_spa);
  dump("C_abuse", sets.c_abuse);
  dump("C_ale", sets.c_ale);
  write_file(dir / "sets.tsv", members);

  Csv csv{"set", "count", "not", "noc", "cp_count", "cp_not", "cp_noc",
          "ca_count", "ca_not", "ca_noc"};
  for (const auto& r : sets.summary(seeds)) {
    csv.row({r.name, str(r.count), str(r.not_count), str(r.noc), str(r.cp_count), str(r.cp_not),
             str(r.cp_noc), str(r.ca_count), str(r.ca_not), str(r.ca_noc)});
  }
  write_file(dir / "sets_summary.csv", csv.str());
}

void write_lexical(const fs::path& dir, const LexicalStats& stats, std::size_t top_k) {
  write_json(dir / "lexical_summary.json", lexical_summary_json(stats, top_k));

  Csv cdf{"metric", "x", "fraction"};
  cdf_rows(cdf, "length_with_trademark", stats.length_with_trademark);
  cdf_rows(cdf, "residual_length", stats.residual_length);
  cdf_rows(cdf, "tokens_per_domain", stats.tokens_per_domain);
  cdf_rows(cdf, "words_per_domain", stats.words_per_domain);
  write_file(dir / "lexical_cdf.csv", cdf.str());

  Csv mix{"tokens", "domains", "words", "segments", "word_fraction"};
  for (const auto& [n, m] : stats.by_token_count) {
    mix.row({std::to_string(n), str(m.domains), str(m.words), str(m.segments),
             num(m.word_fraction())});
  }
  write_file(dir / "lexical_token_mix.csv", mix.str());

  Csv top{"category", "rank", "word", "count"};
  auto emit = [&](const std::string& cat, const WordCounts& counts) {
    std::size_t rank = 0;
    for (const auto& [w, n] : top_words(counts, top_k)) {
      top.row({cat, std::to_string(++rank), w, str(n)});
    }
  };
  emit("(all)", stats.words_overall);
  for (const auto& [cat, counts] : stats.words_by_category) emit(cat, counts);
  write_file(dir / "lexical_top_words.csv", top.str());
}

void write_temporal(const fs::path& dir, const TemporalInputs& in) {
  const auto& sets = in.sets;
  const DomainSet* abuse = &sets.c_abuse;

  const auto life_cp = lifetime_counts(in.cp_timelines);
  const auto life_abuse = lifetime_counts(in.cp_timelines, abuse);
  Csv life{"subset", "x", "fraction"};
  cdf_rows(life, "cp", life_cp);
  cdf_rows(life, "c_abuse", life_abuse);
  write_file(dir / "temporal_lifetime_cdf.csv", life.str());

  const auto lags = detection_lag(in.cp_timelines, sets.first_label);
  Csv lag{"source", "x", "fraction"};
  for (const auto& [src, counts] : lags) cdf_rows(lag, to_string(src), counts);
  write_file(dir / "temporal_lag_cdf.csv", lag.str());

  const auto combo = daily_active_counts(in.all_hits, SquatKind::Combosquatting);
  const auto typo = daily_active_counts(in.all_hits, SquatKind::Typosquatting);
  std::map<Day, std::pair<std::uint64_t, std::uint64_t>> daily;
  for (const auto& [d, n] : combo) daily[d].first = n;
  for (const auto& [d, n] : typo) daily[d].second = n;
  Csv active{"date", "combosquatting", "typosquatting"};
  for (const auto& [d, p] : daily) active.row({format_iso_date(d), str(p.first), str(p.second)});
  write_file(dir / "temporal_daily_active.csv", active.str());

  Csv volume{"subset", "date", "lookups", "normalized"};
  auto volume_rows = [&](std::string_view label, const DomainSet* subset) {
    const auto series = lookup_volume_series(in.cp_timelines, subset);
    const auto norm = normalize_series(series);
    for (const auto& [d, n] : series) {
      volume.row({std::string(label), format_iso_date(d), str(n), num(norm.at(d))});
    }
  };
  volume_rows("cp", nullptr);
  volume_rows("c_abuse", abuse);
  write_file(dir / "temporal_lookup_volume.csv", volume.str());

  Csv cats{"set", "category", "domains", "seeds", "normalized"};
  for (const auto& [label, set] : {std::pair<std::string, const DomainSet*>{"cp", &sets.cp},
                                   {"ca", &sets.ca}}) {
    for (const auto& c : category_counts(*set, in.seeds)) {
      cats.row({label, c.category, str(c.domains), str(c.seeds), num(c.normalized)});
    }
  }
  write_file(dir / "temporal_categories.csv", cats.str());

  Csv hist{"bin", "lo", "hi", "abusive", "other"};
  if (in.alexa) {
    DomainSet combos = sets.cp;
    combos.add_all(sets.ca);
    std::vector<AlexaRow> rows;
    for (const auto& r : *in.alexa) {
      if (combos.contains(r.domain)) rows.push_back(r);
    }
    const auto h = alexa_rank_histogram(mean_alexa_ranks(rows), sets.c_abuse);
    for (std::size_t b = 0; b < kRankBins; ++b) {
      hist.row({std::to_string(b + 1), std::to_string(b * kRankBinWidth + 1),
                std::to_string((b + 1) * kRankBinWidth), str(h.abusive[b]), str(h.other[b])});
    }
  }
  write_file(dir / "temporal_alexa_histogram.csv", hist.str());

  nlohmann::json summary;
  summary["timelines"] = in.cp_timelines.size();
  summary["cp_lifetime_over_1000_days"] = fraction_above(life_cp, 1000);
  summary["abuse_lifetime_over_1000_days"] = fraction_above(life_abuse, 1000);
  summary["active_days"] = daily.size();
  for (const auto& [src, counts] : lags) summary["lagged_domains"][to_string(src)] = counts.total();
  write_json(dir / "temporal_summary.json", summary);
}

void write_infra(const fs::path& dir, const ConcentrationReport& all,
                 const ConcentrationReport& abuse) {
  Csv keys{"subset", "dimension", "key", "domains"};
  Csv per_domain{"subset", "dimension", "x", "fraction"};
  Csv ips{"subset", "x", "fraction"};
  for (const auto& [label, r] : {std::pair<std::string, const ConcentrationReport*>{"all", &all},
                                 {"c_abuse", &abuse}}) {
    for (const auto& [dim, c] : {std::pair<std::string, const Concentration*>{"cidr", &r->cidr},
                                 {"asn", &r->asn},
                                 {"country", &r->country}}) {
      for (const auto& k : c->per_key) keys.row({label, dim, k.key, str(k.domains)});
      cdf_rows(per_domain, label, dim, c->keys_per_domain);
    }
    cdf_rows(ips, label, r->ips_per_domain);
  }
  write_file(dir / "infra_keys.csv", keys.str());
  write_file(dir / "infra_keys_per_domain_cdf.csv", per_domain.str());
  write_file(dir / "infra_ips_per_domain_cdf.csv", ips.str());
  write_json(dir / "infra_summary.json", {{"all", all.to_json()}, {"c_abuse", abuse.to_json()}});
}

void write_certs(const fs::path& dir, const CertStats& stats, const IngestStats& ingest) {
  auto j = stats.to_json();
  j["lines_skipped"] = ingest.skipped;
  write_json(dir / "cert_stats.json", j);

  Csv issuers{"kind", "issuer", "certs", "share"};
  for (const auto& [issuer, n] : stats.combo_issuers) {
    issuers.row({"combosquatting", issuer, str(n),
                 num(static_cast<double>(n) / static_cast<double>(stats.combo_certs))});
  }
  for (const auto& [issuer, n] : stats.typo_issuers) {
    issuers.row({"typosquatting", issuer, str(n),
                 num(static_cast<double>(n) / static_cast<double>(stats.typo_certs))});
  }
  write_file(dir / "cert_issuers.csv", issuers.str());

  std::string fqdns;
  for (const auto& f : stats.combo_fqdns) fqdns += "combosquatting\t" + f + "\n";
  for (const auto& f : stats.typo_fqdns) fqdns += "typosquatting\t" + f + "\n";
  write_file(dir / "cert_fqdns.tsv", fqdns);
}

}  // namespace squatscope::cli
