#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "paths.hpp"
#include "squatscope/dictionary.hpp"
#include "squatscope/ingest.hpp"

using namespace squatscope;

namespace {

Day day(const char* s) { return *parse_iso_date(s); }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("squatscope_ingest_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

WordList english() {
  const std::vector<std::string_view> words = {"apple", "delta", "shell", "free"};
  return WordList::from_words("english", words);
}

}  // namespace

TEST_CASE("dates") {
  CHECK(parse_iso_date("2015-02-28").has_value());
  CHECK_FALSE(parse_iso_date("2015-02-30").has_value());
  CHECK_FALSE(parse_iso_date("2015-2-3").has_value());
  CHECK_FALSE(parse_iso_date("").has_value());
  CHECK(format_iso_date(day("2016-12-31")) == "2016-12-31");
  CHECK(days_between(day("2015-01-01"), day("2015-04-11")) == 100);
}

TEST_CASE("seed parsing flags short and dictionary-word trademarks") {
  const auto en = english();
  const std::string text =
      "trademark,domain,category,rank,origin\n"
      "apple,apple.com,Computers,,AlexaTop500\n"
      "att,att.com,Telecom,,AlexaTop500\n"
      "youtube,YouTube.com.,streaming,2,AlexaTop500\n";
  const auto seeds = parse_seeds(text, &en);
  REQUIRE(seeds.size() == 3);
  CHECK(seeds[0].flag_dictionary_word);
  CHECK_FALSE(seeds[0].flag_short);
  CHECK(seeds[1].flag_short);
  CHECK_FALSE(seeds[2].flagged());
  CHECK(seeds[2].source_domain == "youtube.com");
  CHECK(seeds[2].category == "Streaming");
  CHECK(seeds[2].alexa_rank == 2u);
  CHECK_FALSE(seeds[0].alexa_rank.has_value());
  CHECK(trademark_names(seeds) == std::vector<std::string>{"apple", "att", "youtube"});
}

TEST_CASE("seed errors carry their line number") {
  try {
    parse_seeds("trademark,domain,category,rank,origin\nyoutube,youtube.com,Streaming,,AlexaTop500\n"
                "bad,row\n",
                nullptr);
    FAIL("expected IngestError");
  } catch (const IngestError& e) {
    CHECK(e.code() == IngestErrc::MalformedRow);
    CHECK(e.line() == 3);
  }
  try {
    parse_seeds("a1,a1.com,News,,AlexaTop500\nA1,a1.net,News,,AlexaTop500\n", nullptr);
    FAIL("expected IngestError");
  } catch (const IngestError& e) {
    CHECK(e.code() == IngestErrc::DuplicateTrademark);
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_seeds("x,x.com,Nonsense,,AlexaTop500\n", nullptr), IngestError);
  CHECK_THROWS_AS(parse_seeds("goo gle,g.com,News,,AlexaTop500\n", nullptr), IngestError);
  CHECK_THROWS_AS(load_seeds("/nonexistent/seeds.csv", nullptr), IngestError);
}

TEST_CASE("shipped seed list parses") {
  const auto seeds = load_seeds(testpaths::data("seeds.csv"), nullptr);
  CHECK(seeds.size() >= 50);
  for (const auto& s : seeds) CHECK(canonical_category(s.category).has_value());
}

TEST_CASE("passive DNS line") {
  DnsObservation o;
  REQUIRE(parse_dns_line("2016-05-01\tyoutube-login.com\ta\t1.2.3.4,1.2.3.4,::1\t17", {}, o));
  CHECK(o.date == day("2016-05-01"));
  CHECK(o.qname == "youtube-login.com");
  CHECK(o.rrtype == "A");
  CHECK(o.lookup_count == 17);
  CHECK(o.ips.size() == 2);
  CHECK(o.rdata == "1.2.3.4,1.2.3.4,::1");

  CHECK_FALSE(parse_dns_line("2016-05-01\tyoutube-login.com\tA\t1.2.3.4\t0", {}, o));
  CHECK_FALSE(parse_dns_line("2016-05-01\tyoutube-login.com\tA\t1.2.3.4", {}, o));
  CHECK_FALSE(parse_dns_line("2016-05-01\tyoutube-login.com\tA\tnot-an-ip\t3", {}, o));
  CHECK_FALSE(parse_dns_line("20160501\tyoutube-login.com\tA\t1.2.3.4\t3", {}, o));
  CHECK_FALSE(parse_dns_line("2016-05-01\t\tA\t1.2.3.4\t3", {}, o));
  CHECK(parse_dns_line("2016-05-01\tx.com\tCNAME\ty.com\t3", {}, o));
  CHECK(o.ips.empty());
}

TEST_CASE("active DNS line has no volume") {
  DnsReadOptions active{DnsSource::Active, std::nullopt};
  DnsObservation o;
  REQUIRE(parse_dns_line("2016-05-01\tyoutube-login.com\tA\t1.2.3.4", active, o));
  CHECK(o.lookup_count == 0);
  REQUIRE(parse_dns_line("2016-05-01\tyoutube-login.com\tA\t1.2.3.4\t99", active, o));
  CHECK(o.lookup_count == 0);
}

TEST_CASE("period filter") {
  DnsReadOptions opt{DnsSource::Passive, std::pair{day("2016-01-01"), day("2016-01-31")}};
  DnsObservation o;
  CHECK(parse_dns_line("2016-01-31\ta.com\tA\t1.2.3.4\t1", opt, o));
  CHECK_FALSE(parse_dns_line("2016-02-01\ta.com\tA\t1.2.3.4\t1", opt, o));
}

TEST_CASE("DNS file reader counts malformed lines and streams batches") {
  const auto p = temp_file("pdns.tsv",
                           "# header comment\n"
                           "2016-05-01\ta.com\tA\t1.2.3.4\t1\n"
                           "\n"
                           "garbage\n"
                           "2016-05-02\tb.com\tA\t1.2.3.5\t2\r\n"
                           "2016-05-03\tc.com\tA\t1.2.3.6\t3\n");
  IngestStats stats;
  auto all = ingest_pdns(p, &stats);
  CHECK(all.size() == 3);
  CHECK(stats.records == 3);
  CHECK(stats.skipped == 1);
  CHECK(all[1].lookup_count == 2);

  DnsFileReader reader(p, {});
  std::vector<DnsObservation> batch;
  CHECK(reader.read_batch(batch, 2) == 2);
  CHECK(reader.read_batch(batch, 2) == 1);
  CHECK(reader.read_batch(batch, 2) == 0);
  CHECK(batch == all);
  std::filesystem::remove(p);

  CHECK_THROWS_AS(DnsFileReader("/nonexistent/file", {}), IngestError);
}

TEST_CASE("label feeds deduplicate and normalize") {
  IngestStats stats;
  auto events = parse_labels(
      "2016-01-05\tPayPal-Login.com.\tphish\n"
      "2016-01-05\tpaypal-login.com\tother\n"
      "2016-01-01\tpaypal-login.com\n"
      "bad-date\tx.com\n"
      "2016-01-02\tamazon-deal.net\n",
      LabelSource::PBL, &stats);
  CHECK(stats.records == 4);
  CHECK(stats.skipped == 1);
  REQUIRE(events.size() == 3);
  CHECK(events[0].domain == "amazon-deal.net");
  CHECK(events[1].domain == "paypal-login.com");
  CHECK(events[1].date == day("2016-01-01"));
  CHECK(events[2].date == day("2016-01-05"));
  CHECK(events[2].detail == "phish");
  for (const auto& e : events) CHECK(e.source == LabelSource::PBL);
}

TEST_CASE("label source names round trip") {
  for (auto s : kAllLabelSources) CHECK(parse_label_source(to_string(s)) == s);
  CHECK_FALSE(parse_label_source("XYZ").has_value());
}

TEST_CASE("Alexa whitelist needs more than 90 consecutive days in the top 10k") {
  std::vector<AlexaRow> rows;
  const Day start = day("2015-01-01");
  for (int i = 0; i < 91; ++i) rows.push_back({start + std::chrono::days{i}, 500, "steady.com"});
  for (int i = 0; i < 90; ++i) rows.push_back({start + std::chrono::days{i}, 500, "short.com"});
  for (int i = 0; i < 200; ++i) {
    if (i == 50) continue;  // streak broken
    rows.push_back({start + std::chrono::days{i}, i < 120 ? 900u : 20000u, "gappy.com"});
  }
  for (int i = 0; i < 120; ++i) rows.push_back({start + std::chrono::days{i}, 10001, "low.com"});

  const auto ev = alexa_whitelist(rows);
  REQUIRE(ev.size() == 1);
  CHECK(ev[0].domain == "steady.com");
  CHECK(ev[0].source == LabelSource::ALE);
  CHECK(ev[0].date == start + std::chrono::days{90});

  WhitelistRule loose{10000, 90};
  const auto ev2 = alexa_whitelist(rows, loose);
  CHECK(ev2.size() == 2);  // gappy peaks at 69 consecutive days
}

TEST_CASE("Alexa CSV") {
  IngestStats stats;
  const auto rows = parse_alexa("date,rank,domain\n2015-01-01,1,Google.com\n2015-01-01,0,x.com\n"
                                "2015-01-02,5,yahoo.com\n",
                                &stats);
  CHECK(rows.size() == 2);
  CHECK(stats.skipped == 1);
  CHECK(rows[0].domain == "google.com");
}

TEST_CASE("certificate lines") {
  CertRecord c;
  REQUIRE(parse_cert_line(
      R"({"names": ["PayPal-Login.com", "*.paypal-login.com"], "issuer": "Let's Encrypt", "logged_at": "2016-03-01"})",
      c));
  CHECK(c.names == std::vector<std::string>{"paypal-login.com", "*.paypal-login.com"});
  CHECK(c.issuer == "Let's Encrypt");
  CHECK(c.logged_at == day("2016-03-01"));
  CHECK_FALSE(parse_cert_line(R"({"names": [], "issuer": "x", "logged_at": "2016-03-01"})", c));
  CHECK_FALSE(parse_cert_line(R"({"names": ["a.com"], "issuer": "x"})", c));
  CHECK_FALSE(parse_cert_line("not json", c));
}
