#include "corpus.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string_view>

#include "squatscope/typo.hpp"

namespace corpus {

namespace {

constexpr std::array<std::string_view, 24> kFiller = {
    "login", "secure", "my",     "free",  "online", "update", "verify", "account",
    "support", "shop", "mail",   "app",   "pay",    "store",  "help",   "service",
    "cloud", "news",   "mobile", "sale",  "center", "best",   "official", "2016"};

constexpr std::array<std::string_view, 9> kTlds = {"com", "net", "org", "info", "co.uk",
                                                   "com.br", "com.co", "ml", "ga"};

constexpr std::array<std::string_view, 6> kSubs = {"www", "mail", "m", "login", "cdn", "secure"};

constexpr std::array<std::string_view, 5> kInvalid = {"bad..name.com", "-", "a.b.c.d..",
                                                      "under score.com", "com"};

template <class A>
std::string_view pick(std::mt19937_64& rng, const A& arr) {
  return arr[std::uniform_int_distribution<std::size_t>(0, arr.size() - 1)(rng)];
}

std::string letters(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> c('a', 'z');
  std::string s(len, 'a');
  for (auto& ch : s) ch = static_cast<char>(c(rng));
  return s;
}

}  // namespace

std::vector<std::string> random_trademarks(std::mt19937_64& rng, std::size_t n,
                                           std::size_t min_len, std::size_t max_len) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  while (out.size() < n) {
    auto s = letters(rng, len(rng));
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

std::vector<DnsObservation> make_records(const CorpusSpec& spec,
                                         std::span<const std::string> trademarks,
                                         const Keyboard& kb) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> tm_pick(0, trademarks.size() - 1);
  std::uniform_int_distribution<int> day(0, spec.days - 1);
  std::uniform_int_distribution<std::uint64_t> count(1, 5000);
  std::uniform_int_distribution<int> octet(0, 255);
  std::uniform_int_distribution<int> net(0, 63);

  // A few typo variants per trademark are enough for coverage.
  std::vector<std::vector<std::string>> typo_pool(trademarks.size());
  auto typo_of = [&](std::size_t t) -> const std::string& {
    auto& pool = typo_pool[t];
    if (pool.empty()) {
      auto v = generate_typos(trademarks[t], kb).variants;
      std::shuffle(v.begin(), v.end(), rng);
      v.resize(std::min<std::size_t>(v.size(), 8));
      pool = std::move(v);
    }
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  };

  std::vector<DnsObservation> out;
  out.reserve(spec.records);
  for (std::size_t i = 0; i < spec.records; ++i) {
    DnsObservation obs;
    obs.date = spec.start + std::chrono::days{day(rng)};
    const double r = u(rng);
    std::string e2ld;
    if (r < spec.invalid_rate) {
      obs.qname = std::string(pick(rng, kInvalid));
    } else {
      const double k = u(rng);
      const std::size_t t = tm_pick(rng);
      if (k < spec.combo_rate) {
        const std::string sep = u(rng) < 0.5 ? "-" : "";
        const std::string filler(pick(rng, kFiller));
        e2ld = u(rng) < 0.5 ? filler + sep + trademarks[t] : trademarks[t] + sep + filler;
        if (u(rng) < 0.2) e2ld += "-" + std::string(pick(rng, kFiller));
      } else if (k < spec.combo_rate + spec.typo_rate) {
        e2ld = typo_of(t);
      } else if (k < spec.combo_rate + spec.typo_rate + spec.exact_rate) {
        e2ld = trademarks[t];
      } else {
        e2ld = letters(rng, 4 + static_cast<std::size_t>(u(rng) * 10));
      }
      obs.qname = e2ld + "." + std::string(pick(rng, kTlds));
      if (u(rng) < spec.subdomain_rate) obs.qname = std::string(pick(rng, kSubs)) + "." + obs.qname;
    }
    obs.rrtype = "A";
    const int n_ips = 1 + static_cast<int>(u(rng) * 2);
    for (int j = 0; j < n_ips; ++j) {
      const std::uint32_t ip = (10u << 24) | (static_cast<std::uint32_t>(net(rng)) << 16) |
                               (static_cast<std::uint32_t>(octet(rng)) << 8) |
                               static_cast<std::uint32_t>(octet(rng));
      obs.ips.push_back(IpAddress::from_v4(ip));
    }
    std::sort(obs.ips.begin(), obs.ips.end());
    obs.ips.erase(std::unique(obs.ips.begin(), obs.ips.end()), obs.ips.end());
    for (std::size_t j = 0; j < obs.ips.size(); ++j) {
      if (j) obs.rdata += ',';
      obs.rdata += obs.ips[j].to_string();
    }
    obs.lookup_count = spec.passive ? count(rng) : 0;
    out.push_back(std::move(obs));
  }
  return out;
}

std::string to_tsv(std::span<const DnsObservation> records, bool passive) {
  std::string text;
  text.reserve(records.size() * 64);
  for (const auto& r : records) {
    text += format_iso_date(r.date);
    text += '\t';
    text += r.qname;
    text += '\t';
    text += r.rrtype;
    text += '\t';
    text += r.rdata;
    if (passive) {
      text += '\t';
      text += std::to_string(r.lookup_count);
    }
    text += '\n';
  }
  return text;
}

}  // namespace corpus
