#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "paths.hpp"
#include "squatscope/domain.hpp"
#include "squatscope/strings.hpp"

using namespace squatscope;

namespace {

const SuffixList& psl() {
  static const SuffixList list = SuffixList::from_file(testpaths::data("public_suffix_list.dat"));
  return list;
}

DomainErrc error_of(std::string_view input, const SuffixList& s) {
  DomainErrc code{};
  CHECK_FALSE(try_parse_domain(input, s, &code).has_value());
  return code;
}

}  // namespace

TEST_CASE("shipped suffix list carries a version and the rules the fixtures need") {
  CHECK_FALSE(psl().version().empty());
  CHECK(psl().size() > 5000);
  CHECK(psl().lookup("x.com.br") == "com.br");
  CHECK(psl().lookup("x.com.co") == "com.co");
  CHECK(psl().lookup("x.co.uk") == "co.uk");
}

TEST_CASE("parse_domain splits at the public suffix") {
  auto d = parse_domain("youtube-login.com", psl());
  CHECK(d.e2ld == "youtube-login");
  CHECK(d.public_suffix == "com");
  CHECK(d.fqdn == "youtube-login.com");
  CHECK(d.registrable() == "youtube-login.com");

  CHECK(parse_domain("yahoomail.com.co", psl()).e2ld == "yahoomail");
  CHECK(parse_domain("deltae.com.br", psl()).e2ld == "deltae");

  auto sub = parse_domain("Mail.Secure.PayPal-Updates.ML.", psl());
  CHECK(sub.fqdn == "mail.secure.paypal-updates.ml");
  CHECK(sub.e2ld == "paypal-updates");
  CHECK(sub.labels == std::vector<std::string>{"mail", "secure", "paypal-updates"});
  CHECK(sub.raw == "Mail.Secure.PayPal-Updates.ML.");
}

TEST_CASE("parse_domain errors") {
  CHECK(error_of("COM", psl()) == DomainErrc::NoRegistrableDomain);
  CHECK(error_of("co.uk", psl()) == DomainErrc::NoRegistrableDomain);
  CHECK(error_of("", psl()) == DomainErrc::EmptyInput);
  CHECK(error_of("   ", psl()) == DomainErrc::EmptyInput);
  CHECK(error_of("a..com", psl()) == DomainErrc::InvalidLabel);
  CHECK(error_of("bad!char.com", psl()) == DomainErrc::InvalidLabel);
  CHECK(error_of(std::string(64, 'a') + ".com", psl()) == DomainErrc::InvalidLabel);

  std::string long_name;
  for (int i = 0; i < 60; ++i) long_name += "abcd.";
  long_name += "com";
  CHECK(long_name.size() > 253);
  CHECK(error_of(long_name, psl()) == DomainErrc::InvalidLabel);

  CHECK(parse_domain(std::string(63, 'a') + ".com", psl()).e2ld.size() == 63);
  CHECK_THROWS_AS(parse_domain("com", psl()), DomainError);
}

TEST_CASE("underscore and punycode labels are accepted") {
  CHECK(parse_domain("_dmarc.example.com", psl()).e2ld == "example");
  CHECK(parse_domain("xn--facebook-06k.com", psl()).e2ld == "xn--facebook-06k");
}

TEST_CASE("suffix_lookup on textbook rules") {
  auto s = SuffixList::from_string("// comment\ncom\nuk\nco.uk\n# hash comment\n*.ck\n!www.ck\n");
  CHECK(suffix_lookup("a.b.co.uk", s) == "co.uk");
  CHECK(suffix_lookup("example.com", s) == "com");
  CHECK(suffix_lookup("x.unknowntld", s) == "unknowntld");
  CHECK(suffix_lookup("foo.ck", s) == "foo.ck");
  CHECK(suffix_lookup("a.foo.ck", s) == "foo.ck");
  CHECK(suffix_lookup("www.ck", s) == "ck");
  CHECK(suffix_lookup("a.www.ck", s) == "ck");
  CHECK(s.size() == 5);
}

TEST_CASE("suffix list version comes from the VERSION line") {
  auto s = SuffixList::from_string("// VERSION: 2020-01-01_00-00-00_UTC\ncom\n");
  CHECK(s.version() == "2020-01-01_00-00-00_UTC");
  CHECK(SuffixList::from_string("com\n", "pinned").version() == "pinned");
}

TEST_CASE("suffix lookup agrees with the brute-force rule scan") {
  const auto& rules = psl().rules();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, rules.size() - 1);
  std::uniform_int_distribution<int> extra(0, 3);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    std::string base = rules[pick(rng)];
    if (base.empty()) continue;
    if (base[0] == '!') base = base.substr(1);
    if (base.starts_with("*.")) base = "wild." + base.substr(2);
    // Skip IDN rules; names are ASCII.
    bool ascii = true;
    for (unsigned char c : base) ascii = ascii && c < 0x80;
    if (!ascii) continue;
    std::string name = base;
    for (int k = extra(rng); k > 0; --k) name = oracle::random_string(rng, 3, "abcxyz") + "." + name;
    CHECK_MESSAGE(suffix_lookup(name, psl()) == oracle::suffix_of(name, rules), name);
    ++checked;
  }
  CHECK(checked > 300);
  for (std::string name : {"x.unknowntld", "a.b.c.zzz", "foo.bar.ck", "www.ck", "x.www.ck"}) {
    CHECK_MESSAGE(suffix_lookup(name, psl()) == oracle::suffix_of(name, rules), name);
  }
}

TEST_CASE("round trip, case insensitivity and left-append monotonicity") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> tlds = {"com", "co.uk", "com.br", "net", "ml", "org"};
  for (int i = 0; i < 300; ++i) {
    std::string name = oracle::random_string(rng, 1 + rng() % 12, "abcdefghij0123-_") + "." +
                       tlds[rng() % tlds.size()];
    auto d = try_parse_domain(name, psl());
    if (!d) continue;
    CHECK(parse_domain(d->fqdn, psl()) == *d);

    std::string upper = name;
    for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    CHECK(parse_domain(upper, psl()) == *d);

    auto longer = parse_domain("sub." + name, psl());
    CHECK(longer.e2ld == d->e2ld);
    CHECK(longer.public_suffix == d->public_suffix);

    std::string joined;
    for (const auto& l : d->labels) joined += l + ".";
    CHECK(joined + d->public_suffix == d->fqdn);
    CHECK(d->e2ld.find('.') == std::string::npos);
  }
}
