#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "paths.hpp"
#include "squatscope/dictionary.hpp"
#include "squatscope/kernels.hpp"
#include "squatscope/lexical.hpp"
#include "squatscope/segment.hpp"

using namespace squatscope;

namespace {

const UnigramModel& small() {
  static const UnigramModel m = UnigramModel::from_file(testpaths::fixture("unigrams_small.tsv"));
  return m;
}

const UnigramModel& shipped() {
  static const UnigramModel m = UnigramModel::from_file(testpaths::data("unigrams.tsv"));
  return m;
}

DictionarySet fixture_dicts() {
  DictionarySet d;
  const std::vector<std::string_view> english = {"friends", "free", "online", "code", "store",
                                                 "my", "credit", "card", "activate", "login"};
  d.add(WordList::from_words("english", english));
  const std::vector<std::string_view> slang = {"pwn"};
  d.add(WordList::from_words("slang", slang));
  return d;
}

std::string concat(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) s += t;
  return s;
}

}  // namespace

TEST_CASE("unigram model probabilities") {
  const auto& m = small();
  CHECK(m.contains("card"));
  CHECK(m.total() > 0);
  CHECK(m.log_prob("card") == doctest::Approx(std::log(900.0 / m.total())));
  CHECK(m.log_prob_unknown(3) == doctest::Approx(std::log(10.0 / (m.total() * 1000.0))));
  CHECK(m.log_prob("zzzz") == m.log_prob_unknown(4));
  CHECK(m.log_prob("card") <= 0.0);
  CHECK_THROWS(UnigramModel::from_string("word-without-count\n"));
  CHECK_THROWS(UnigramModel::from_string("word\tNaN\n"));
}

TEST_CASE("segment examples") {
  CHECK(segment("facebookfriends", shipped()).tokens == std::vector<std::string>{"facebook", "friends"});
  CHECK(segment("facebookfriends", small()).tokens == std::vector<std::string>{"facebook", "friends"});
  CHECK(segment("a", small()).tokens == std::vector<std::string>{"a"});
  CHECK(segment("activatemycreditcard", small()).tokens ==
        std::vector<std::string>{"activate", "my", "credit", "card"});
  CHECK(segment("activatemycreditcard", shipped()).tokens ==
        std::vector<std::string>{"activate", "my", "credit", "card"});
}

TEST_CASE("segment score is the sum of token log probabilities") {
  auto t = segment("freeonlinestore", small());
  double sum = 0;
  for (const auto& tok : t.tokens) sum += small().log_prob(tok);
  CHECK(t.score == doctest::Approx(sum));
  CHECK(concat(t.tokens) == "freeonlinestore");
}

TEST_CASE("segment equals the exhaustive split maximum") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    const auto s = oracle::random_string(rng, 1 + rng() % 12, "acdefikmnorty");
    const auto got = segment(s, small());
    const auto want = oracle::best_split(s, small());
    CHECK_MESSAGE(got.score == doctest::Approx(want.score).epsilon(1e-12), s);
    CHECK_MESSAGE(got.tokens == want.tokens, s);
  }
  for (const char* ladder : {"activatemycr", "activatemycre", "activatemycred", "activatemycredi",
                             "activatemycredit", "activatemycreditca", "activatemycreditcar",
                             "activatemycreditcard"}) {
    const auto got = segment(ladder, shipped());
    const auto want = oracle::best_split(ladder, shipped());
    CHECK_MESSAGE(got.score == doctest::Approx(want.score).epsilon(1e-12), ladder);
    CHECK_MESSAGE(got.tokens == want.tokens, ladder);
  }
}

TEST_CASE("ties go to fewer tokens, then lexicographic order") {
  UnigramModel m;
  m.add("ab", 10);
  m.add("a", 10);
  m.add("b", 10);
  m.add("c", 10);
  // Equal counts: two factors beat three.
  CHECK(segment("abc", m).tokens == std::vector<std::string>{"ab", "c"});

  UnigramModel tie;
  tie.add("xa", 1);
  tie.add("ax", 1);
  tie.add("x", 1);
  tie.add("a", 1);
  // "xax" = xa|x or x|ax, both two tokens with equal score.
  CHECK(segment("xax", tie).tokens == std::vector<std::string>{"x", "ax"});
  CHECK(oracle::best_split("xax", tie).tokens == std::vector<std::string>{"x", "ax"});
}

TEST_CASE("concatenation invariant on fuzzed inputs") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 2000; ++i) {
    const auto s = oracle::random_string(rng, 1 + rng() % 63, "abcdefghijklmnopqrstuvwxyz0123456789");
    const auto t = segment(s, shipped());
    CHECK(concat(t.tokens) == s);
  }
}

TEST_CASE("classify_tokens") {
  const auto d = fixture_dicts();
  const std::vector<std::string> ff = {"facebook", "friends"};
  auto c = classify_tokens(std::span<const std::string>(ff), d);
  CHECK(c.words == 1);
  CHECK(c.segments == 1);
  CHECK(c.flags == std::vector<bool>{false, true});

  const std::vector<std::string> zz = {"zzqx"};
  DictionarySet none;
  CHECK(classify_tokens(std::span<const std::string>(zz), none).segments == 1);

  const std::vector<std::string> fo = {"free", "online"};
  CHECK(classify_tokens(std::span<const std::string>(fo), d).words == 2);
  CHECK(d.contains_any("FREE"));
  CHECK(d.contains_any("pwn"));
}

TEST_CASE("adding a dictionary word never lowers the word count") {
  std::mt19937_64 rng(47);
  auto d = fixture_dicts();
  for (int i = 0; i < 100; ++i) {
    const auto s = oracle::random_string(rng, 3 + rng() % 12, "acdefikmnorty");
    const auto t = segment(s, small());
    const auto before = classify_tokens(t, d).words;
    DictionarySet more = d;
    WordList extra("extra");
    extra.add(t.tokens[rng() % t.tokens.size()]);
    more.add(extra);
    CHECK(classify_tokens(t, more).words >= before);
  }
}

TEST_CASE("residual_length") {
  CHECK(residual_length("bankofamerica-com-login-sys-update-online", "bankofamerica") == 28);
  CHECK(residual_length("youtube", "youtube") == 0);
  CHECK(residual_length("myexample", "example") == 2);
  CHECK_THROWS_AS(residual_length("example", "google"), LexicalError);
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    const auto t = oracle::random_string(rng, 3, "abc");
    const auto c = oracle::random_string(rng, rng() % 5, "abc") + t + oracle::random_string(rng, rng() % 5, "abc");
    CHECK(residual_length(c, t) + t.size() == c.size());
  }
}

TEST_CASE("residue tokens drop the trademark and hyphens and keep digit runs") {
  CHECK(residue_tokens("activatemycreditcardbankofamerica", "bankofamerica", small()) ==
        std::vector<std::string>{"activate", "my", "credit", "card"});
  CHECK(residue_tokens("free-facebook-login2016", "facebook", small()) ==
        std::vector<std::string>{"free", "login", "2016"});
  CHECK(residue_tokens("youtube", "youtube", small()).empty());
}

TEST_CASE("lexical report on a degenerate corpus") {
  const auto d = fixture_dicts();
  std::vector<LexicalEntry> entries = {{"freegoogle", "google", "Search Engines"},
                                       {"amazonstore", "amazon", "E-Shop (Online)"},
                                       {"mypaypal", "paypal", "Financial"},
                                       {"mypaypal", "paypal", "Financial"}};
  const auto s = lexical_report(entries, small(), d);
  CHECK(s.domains == 3);
  CHECK(s.tokens_per_domain.cdf() == std::vector<CdfPoint>{{1, 1.0}});
  CHECK(s.by_token_count.at(1).word_fraction() == 1.0);
  CHECK(s.words_overall.at("free") == 1);
  CHECK(s.words_by_category.at("Financial").at("my") == 1);
  const auto residual = s.residual_length.cdf();
  REQUIRE(residual.size() == 3);
  CHECK(residual[0].x == 2);
  CHECK(residual[0].fraction == doctest::Approx(1.0 / 3));
  CHECK(residual[1].x == 4);
  CHECK(residual[2].x == 5);
  CHECK(residual[2].fraction == 1.0);

  const auto j = lexical_summary_json(s, 5);
  CHECK(j["domains"] == 3);
}

TEST_CASE("top words recover planted frequencies") {
  const auto d = fixture_dicts();
  // 100 domains: free x50, online x30, store x15, code x5.
  std::vector<LexicalEntry> entries;
  auto plant = [&](const std::string& w, int n) {
    for (int i = 0; i < n; ++i) {
      entries.push_back({w + "brand" + std::to_string(i), "brand", "Lifestyle"});
    }
  };
  plant("free", 50);
  plant("online", 30);
  plant("store", 15);
  plant("code", 5);
  const auto s = lexical_report(entries, small(), d);
  const auto top = top_words(s.words_overall, 3);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == std::pair<std::string, std::uint64_t>{"free", 50});
  CHECK(top[1] == std::pair<std::string, std::uint64_t>{"online", 30});
  CHECK(top[2] == std::pair<std::string, std::uint64_t>{"store", 15});

  const auto par = lexical_report_parallel(entries, small(), d, 4);
  CHECK(par == s);
}
