#include "squatscope/lexical.hpp"

#include <algorithm>

namespace squatscope {

TokenCounts classify_tokens(std::span<const std::string> tokens, const DictionarySet& dicts) {
  TokenCounts c;
  c.flags.reserve(tokens.size());
  for (const auto& tok : tokens) {
    const bool word = dicts.contains_any(tok);
    c.flags.push_back(word);
    ++(word ? c.words : c.segments);
  }
  return c;
}

TokenCounts classify_tokens(const Tokenization& t, const DictionarySet& dicts) {
  return classify_tokens(std::span<const std::string>(t.tokens), dicts);
}

std::size_t residual_length(std::string_view candidate, std::string_view trademark) {
  if (trademark.empty() || candidate.find(trademark) == std::string_view::npos) {
    throw LexicalError("NotContained: '" + std::string(trademark) + "' not in '" +
                       std::string(candidate) + "'");
  }
  return candidate.size() - trademark.size();
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

void tokenize_side(std::string_view text, const UnigramModel& model,
                   std::vector<std::string>& out) {
  for (auto piece : split(text, '-')) {
    std::size_t i = 0;
    while (i < piece.size()) {
      std::size_t j = i;
      const bool digits = is_digit(piece[i]);
      while (j < piece.size() && is_digit(piece[j]) == digits) ++j;
      std::string_view run = piece.substr(i, j - i);
      if (digits) {
        out.emplace_back(run);
      } else {
        for (auto& tok : segment(run, model).tokens) out.push_back(std::move(tok));
      }
      i = j;
    }
  }
}

}  // namespace

std::vector<std::string> residue_tokens(std::string_view candidate, std::string_view trademark,
                                        const UnigramModel& model) {
  residual_length(candidate, trademark);
  const std::size_t pos = candidate.find(trademark);
  std::vector<std::string> out;
  tokenize_side(candidate.substr(0, pos), model, out);
  tokenize_side(candidate.substr(pos + trademark.size()), model, out);
  return out;
}

void LexicalStats::merge(const LexicalStats& o) {
  domains += o.domains;
  length_with_trademark.merge(o.length_with_trademark);
  residual_length.merge(o.residual_length);
  tokens_per_domain.merge(o.tokens_per_domain);
  words_per_domain.merge(o.words_per_domain);
  for (const auto& [k, mix] : o.by_token_count) {
    auto& m = by_token_count[k];
    m.domains += mix.domains;
    m.words += mix.words;
    m.segments += mix.segments;
  }
  for (const auto& [cat, counts] : o.words_by_category) {
    auto& dst = words_by_category[cat];
    for (const auto& [w, n] : counts) dst[w] += n;
  }
  for (const auto& [w, n] : o.words_overall) words_overall[w] += n;
}

LexicalStats lexical_stats_for(const LexicalEntry& e, const UnigramModel& model,
                               const DictionarySet& dicts) {
  LexicalStats s;
  const std::size_t residual = residual_length(e.e2ld, e.trademark);
  auto tokens = residue_tokens(e.e2ld, e.trademark, model);
  auto counts = classify_tokens(std::span<const std::string>(tokens), dicts);
  s.domains = 1;
  s.length_with_trademark.add(static_cast<std::int64_t>(e.e2ld.size()));
  s.residual_length.add(static_cast<std::int64_t>(residual));
  s.tokens_per_domain.add(static_cast<std::int64_t>(tokens.size()));
  s.words_per_domain.add(static_cast<std::int64_t>(counts.words));
  auto& mix = s.by_token_count[tokens.size()];
  mix.domains = 1;
  mix.words = counts.words;
  mix.segments = counts.segments;
  auto& cat = s.words_by_category[e.category];
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!counts.flags[i]) continue;
    ++cat[tokens[i]];
    ++s.words_overall[tokens[i]];
  }
  return s;
}

LexicalStats lexical_report(std::vector<LexicalEntry> entries, const UnigramModel& model,
                            const DictionarySet& dicts) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  LexicalStats total;
  for (const auto& e : entries) total.merge(lexical_stats_for(e, model, dicts));
  return total;
}

std::vector<std::pair<std::string, std::uint64_t>> top_words(const WordCounts& counts,
                                                             std::size_t k) {
  std::vector<std::pair<std::string, std::uint64_t>> v(counts.begin(), counts.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (v.size() > k) v.resize(k);
  return v;
}

nlohmann::json lexical_summary_json(const LexicalStats& s, std::size_t top_k) {
  nlohmann::json j;
  j["domains"] = s.domains;
  std::uint64_t words = 0, segments = 0;
  for (const auto& [k, mix] : s.by_token_count) {
    words += mix.words;
    segments += mix.segments;
  }
  j["tokens"] = words + segments;
  j["words"] = words;
  j["segments"] = segments;
  j["word_fraction"] = words + segments == 0 ? 0.0 : static_cast<double>(words) / (words + segments);
  auto to_json_list = [](const auto& top) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, n] : top) arr.push_back({{"word", w}, {"count", n}});
    return arr;
  };
  j["top_words"] = to_json_list(top_words(s.words_overall, top_k));
  nlohmann::json per = nlohmann::json::object();
  for (const auto& [cat, counts] : s.words_by_category) {
    per[cat] = to_json_list(top_words(counts, top_k));
  }
  j["top_words_by_category"] = per;
  return j;
}

}  // namespace squatscope
