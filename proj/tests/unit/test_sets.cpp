#include "doctest.h"

#include <algorithm>
#include <random>

#include "paths.hpp"
#include "squatscope/certs.hpp"
#include "squatscope/ingest.hpp"
#include "squatscope/scan.hpp"
#include "squatscope/sets.hpp"

using namespace squatscope;

namespace {

const SuffixList& psl() {
  static const SuffixList list = SuffixList::from_file(testpaths::data("public_suffix_list.dat"));
  return list;
}

const SquatMatcher& matcher() {
  static const SquatMatcher m({"paypal", "amazon", "google"}, Keyboard::qwerty());
  return m;
}

ScanContext ctx() { return {psl(), matcher(), {}}; }

Day day(const char* s) { return *parse_iso_date(s); }

DnsObservation rec(const std::string& qname, const char* date = "2016-01-01") {
  DnsObservation o;
  o.date = day(date);
  o.qname = qname;
  o.rrtype = "A";
  o.rdata = "10.0.0.1";
  o.ips = {*IpAddress::parse("10.0.0.1")};
  o.lookup_count = 1;
  return o;
}

std::vector<ScanHit> scan(const std::vector<DnsObservation>& records) {
  std::vector<ScanHit> hits;
  scan_stream(records, ctx(), hits);
  return hits;
}

std::vector<std::string> domains(const DomainSet& s) {
  std::vector<std::string> out;
  for (const auto& [d, t] : s.members()) out.push_back(d);
  return out;
}

LabelEvent label(const std::string& d, LabelSource s, const char* date = "2016-02-01") {
  return {d, s, day(date), {}};
}

}  // namespace

TEST_CASE("labelled sets intersect with CP") {
  const auto pdns = scan({rec("paypal-a.com"), rec("www.paypal-b.com"), rec("paypal-c.com"),
                          rec("paypal-c.com", "2016-01-02"), rec("google.com"), rec("unrelated.net")});
  const auto adns = scan({rec("amazon-x.co.uk")});
  const std::vector<LabelEvent> labels = {
      label("mail.paypal-b.com", LabelSource::MAL), label("paypal-d.com", LabelSource::MAL),
      label("paypal-d.com", LabelSource::MAL, "2016-01-15"), label("google.com", LabelSource::MAL),
      label("paypal-a.com", LabelSource::PBL), label("amazon-x.co.uk", LabelSource::ALE),
      label("bad..name", LabelSource::SPA)};
  const auto s = derive_sets(pdns, adns, labels, ctx());

  CHECK(domains(s.cp) == std::vector<std::string>{"paypal-a.com", "paypal-b.com", "paypal-c.com"});
  CHECK(domains(s.ca) == std::vector<std::string>{"amazon-x.co.uk"});
  CHECK(domains(s.c_mal) == std::vector<std::string>{"paypal-b.com", "paypal-d.com"});
  CHECK(domains(s.c_mal.intersect(s.cp)) == std::vector<std::string>{"paypal-b.com"});
  CHECK(domains(s.c_abuse) ==
        std::vector<std::string>{"paypal-a.com", "paypal-b.com", "paypal-d.com"});
  CHECK(domains(s.c_ale) == std::vector<std::string>{"amazon-x.co.uk"});
  CHECK(s.c_spa.empty());
  CHECK(s.labels_in == 7);
  CHECK(s.labels_skipped == 1);
  CHECK(s.first_label.at(LabelSource::MAL).at("paypal-d.com") == day("2016-01-15"));
  CHECK_FALSE(s.first_label.at(LabelSource::MAL).contains("google.com"));

  std::vector<TrademarkSeed> seeds(3);
  seeds[0].trademark = "paypal";
  seeds[0].category = "Financial";
  seeds[1].trademark = "amazon";
  seeds[1].category = "E-Shop (Online)";
  seeds[2].trademark = "google";
  seeds[2].category = "Search Engines";
  const auto rows = s.summary(seeds);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].name == "CP");
  CHECK(rows[0].count == 3);
  CHECK(rows[0].not_count == 1);
  CHECK(rows[0].noc == 1);
  CHECK(rows[2].name == "C_mal");
  CHECK(rows[2].cp_count == 1);
  CHECK(rows[2].ca_count == 0);
  CHECK(rows[7].name == "C_ale");
  CHECK(rows[7].ca_count == 1);
}

TEST_CASE("set derivation ignores input order") {
  std::vector<DnsObservation> records;
  std::vector<LabelEvent> labels;
  std::mt19937_64 rng(61);
  const std::vector<std::string> fillers = {"login", "secure", "deal", "pay", "x1", "shop"};
  for (int i = 0; i < 200; ++i) {
    const std::string tm = i % 2 ? "paypal" : "amazon";
    const std::string d = fillers[rng() % fillers.size()] + tm + std::to_string(rng() % 30) + ".com";
    records.push_back(rec(d));
    if (rng() % 3 == 0) labels.push_back(label(d, kAllLabelSources[rng() % 5]));
  }
  const auto base = derive_sets(scan(records), {}, labels, ctx());
  for (int round = 0; round < 5; ++round) {
    std::shuffle(records.begin(), records.end(), rng);
    std::shuffle(labels.begin(), labels.end(), rng);
    CHECK(derive_sets(scan(records), {}, labels, ctx()) == base);
  }
  DomainSet u;
  for (auto src : {LabelSource::MAL, LabelSource::PBL, LabelSource::APT, LabelSource::SPA}) {
    u.add_all(base.labelled(src));
    for (const auto& [d, t] : base.labelled(src).members()) CHECK(base.c_abuse.contains(d));
  }
  CHECK(u == base.c_abuse);
}

TEST_CASE("certificate scan counts certificates naming squatting domains") {
  auto cert = [](std::vector<std::string> names, std::string issuer) {
    return CertRecord{std::move(names), std::move(issuer), day("2016-03-01")};
  };
  const std::vector<CertRecord> certs = {
      cert({"paypal-login.com", "www.paypal-login.com"}, "Let's Encrypt"),
      cert({"*.secure-amazon.net"}, "Let's Encrypt"),
      cert({"googleplay-update.ml"}, "Comodo"),
      cert({"example.org", "amazon-deals.co.uk"}, "Let's Encrypt"),
      cert({"paypall.com"}, "Comodo"),
      cert({"paypal.com"}, "DigiCert"),
      cert({"google.com", "www.google.com"}, "Google"),
      cert({"unrelated.net"}, "Comodo"),
      cert({"bad..name"}, "Comodo"),
      cert({"another.org"}, "Let's Encrypt")};
  const auto s = cert_scan(certs, ctx());
  CHECK(s.certs_in == 10);
  CHECK(s.combo_certs == 4);
  CHECK(s.typo_certs == 1);
  CHECK(s.names_skipped == 1);
  CHECK(s.combo_fqdns.size() == 5);
  CHECK(s.typo_fqdns == std::set<std::string>{"paypall.com"});
  CHECK(s.combo_issuers.at("Let's Encrypt") == 3);
  CHECK(s.combo_issuer_share().at("Let's Encrypt") == doctest::Approx(0.75));
  CHECK(s.to_json()["combo_certs"] == 4);

  CertStats a = cert_scan(std::span(certs).first(5), ctx());
  a.merge(cert_scan(std::span(certs).subspan(5), ctx()));
  CHECK(a == s);
}
