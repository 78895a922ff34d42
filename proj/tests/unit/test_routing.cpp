#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "squatscope/routing.hpp"

using namespace squatscope;

namespace {

IpAddress ip(const char* s) { return *IpAddress::parse(s); }
Day day(const char* s) { return *parse_iso_date(s); }

}  // namespace

TEST_CASE("addresses") {
  CHECK(ip("10.0.1.5").v4);
  CHECK(ip("10.0.1.5").to_string() == "10.0.1.5");
  CHECK(ip("2001:db8::1").to_string() == "2001:db8::1");
  CHECK_FALSE(IpAddress::parse("256.0.0.1").has_value());
  CHECK_FALSE(IpAddress::parse("1.2.3").has_value());
  CHECK_FALSE(IpAddress::parse("").has_value());
  CHECK(IpAddress::from_v4(0x0a000105u) == ip("10.0.1.5"));
}

TEST_CASE("prefixes") {
  auto p = *Prefix::parse("10.0.1.77/24");
  CHECK(p.to_string() == "10.0.1.0/24");
  CHECK(p.key_length() == 24 + kV4MappedBits);
  CHECK(p.contains(ip("10.0.1.200")));
  CHECK_FALSE(p.contains(ip("10.0.2.1")));
  CHECK_FALSE(p.contains(ip("2001:db8::1")));
  CHECK_FALSE(Prefix::parse("10.0.0.0/33").has_value());
  CHECK_FALSE(Prefix::parse("10.0.0.0").has_value());
  CHECK(Prefix::parse("2001:db8::/32")->to_string() == "2001:db8::/32");
}

TEST_CASE("longest prefix wins") {
  auto snap = RoutingSnapshot::from_string(
      "# prefix\tasn\tcc\n"
      "10.0.0.0/8\tAS1\tus\n"
      "10.0.0.0/16\t2\tDE\n"
      "10.0.1.0/24\t3\tNL\n"
      "2001:db8::/32\t4\tFR\n");
  CHECK(snap.size() == 4);
  CHECK(snap.lookup(ip("10.0.1.5")) == RouteInfo{"10.0.1.0/24", 3, "NL"});
  CHECK(snap.lookup(ip("10.0.2.5"))->asn == 2);
  CHECK(snap.lookup(ip("10.9.9.9"))->country == "US");
  CHECK_FALSE(snap.lookup(ip("192.168.1.1")).has_value());
  CHECK(lpm_lookup(ip("2001:db8:1::5"), snap)->asn == 4);
  CHECK_FALSE(snap.lookup(ip("2001:db9::1")).has_value());
  CHECK_THROWS_AS(RoutingSnapshot::from_string("10.0.0.0/8\tASx\tUS\n"), RoutingError);
  CHECK_THROWS_AS(RoutingSnapshot::from_string("10.0.0.0/8\n"), RoutingError);
}

TEST_CASE("repeated prefix replaces the earlier entry") {
  RoutingSnapshot snap;
  snap.add(*Prefix::parse("10.0.0.0/8"), 1, "US");
  snap.add(*Prefix::parse("10.0.0.0/8"), 2, "DE");
  CHECK(snap.size() == 1);
  CHECK(snap.lookup(ip("10.1.1.1"))->asn == 2);
}

TEST_CASE("IPv6 default route never matches IPv4 addresses") {
  RoutingSnapshot snap;
  snap.add(*Prefix::parse("::/0"), 9, "ZZ");
  CHECK_FALSE(snap.lookup(ip("10.0.0.1")).has_value());
  CHECK(snap.lookup(ip("2001::1"))->asn == 9);
  snap.add(*Prefix::parse("0.0.0.0/0"), 8, "YY");
  CHECK(snap.lookup(ip("10.0.0.1"))->asn == 8);
}

TEST_CASE("trie lookup equals the linear scan on random tables") {
  std::mt19937_64 rng(81);
  RoutingSnapshot snap;
  for (int i = 0; i < 2000; ++i) {
    const std::uint32_t net = static_cast<std::uint32_t>(rng());
    const unsigned len = 8 + rng() % 25;
    auto p = *Prefix::parse(IpAddress::from_v4(net).to_string() + "/" + std::to_string(len));
    snap.add(p, static_cast<std::uint32_t>(i), "C" + std::to_string(i % 7));
  }
  const auto& routes = snap.routes();
  for (int i = 0; i < 10000; ++i) {
    // Bias toward covered space by reusing route networks with random host bits.
    std::uint32_t a = static_cast<std::uint32_t>(rng());
    if (i % 2 == 0) {
      const auto& n = routes[rng() % routes.size()].first.network.bytes;
      a = (std::uint32_t{n[12]} << 24) | (std::uint32_t{n[13]} << 16) | (a & 0xffffu);
    }
    const auto addr = IpAddress::from_v4(a);
    CHECK(snap.lookup(addr) == oracle::linear_lpm(addr, routes));
  }
}

TEST_CASE("exhaustive check over a toy 8-bit universe") {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 20; ++round) {
    RoutingSnapshot snap;
    for (int i = 0; i < 12; ++i) {
      const unsigned len = rng() % 9;
      const unsigned top = static_cast<unsigned>(rng() % 256);
      auto p = *Prefix::parse(std::to_string(top) + ".0.0.0/" + std::to_string(len));
      snap.add(p, static_cast<std::uint32_t>(i), "X");
    }
    for (unsigned a = 0; a < 256; ++a) {
      const auto addr = IpAddress::from_v4(a << 24);
      CHECK(snap.lookup(addr) == oracle::linear_lpm(addr, snap.routes()));
    }
  }
}

TEST_CASE("routing history picks the closest snapshot") {
  RoutingSnapshot s1, s2;
  s1.add(*Prefix::parse("10.0.0.0/8"), 1, "US");
  s2.add(*Prefix::parse("10.0.0.0/8"), 2, "US");
  RoutingHistory h;
  CHECK(h.empty());
  CHECK(h.closest(day("2016-01-01")) == nullptr);
  h.add(day("2016-01-01"), s1);
  h.add(day("2016-01-11"), s2);
  auto asn_at = [&](const char* d) { return h.closest(day(d))->lookup(ip("10.0.0.1"))->asn; };
  CHECK(asn_at("2015-06-01") == 1);
  CHECK(asn_at("2016-01-05") == 1);
  CHECK(asn_at("2016-01-06") == 1);  // tie goes to the earlier snapshot
  CHECK(asn_at("2016-01-07") == 2);
  CHECK(asn_at("2017-01-01") == 2);
}
