#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "squatscope/cdf.hpp"
#include "squatscope/dictionary.hpp"
#include "squatscope/segment.hpp"

namespace squatscope {

class LexicalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TokenCounts {
  std::size_t words = 0;
  std::size_t segments = 0;
  std::vector<bool> flags;  // per token: found in some dictionary
};

TokenCounts classify_tokens(std::span<const std::string> tokens, const DictionarySet& dicts);
TokenCounts classify_tokens(const Tokenization& t, const DictionarySet& dicts);

// Characters added to the trademark: |candidate| - |trademark|. Throws
// LexicalError (NotContained) when the trademark does not occur.
std::size_t residual_length(std::string_view candidate, std::string_view trademark);

// Tokens of the candidate once the first occurrence of the trademark is cut
// out. The text on each side is split on hyphens (dropped) and at
// letter/digit boundaries; digit runs are single tokens and letter runs go
// through segment().
std::vector<std::string> residue_tokens(std::string_view candidate, std::string_view trademark,
                                        const UnigramModel& model);

struct LexicalEntry {
  std::string e2ld;
  std::string trademark;
  std::string category;

  friend auto operator<=>(const LexicalEntry&, const LexicalEntry&) = default;
};

struct TokenMix {
  std::uint64_t domains = 0;
  std::uint64_t words = 0;
  std::uint64_t segments = 0;

  double word_fraction() const {
    const auto t = words + segments;
    return t == 0 ? 0.0 : static_cast<double>(words) / static_cast<double>(t);
  }
  friend bool operator==(const TokenMix&, const TokenMix&) = default;
};

using WordCounts = std::map<std::string, std::uint64_t>;

struct LexicalStats {
  std::uint64_t domains = 0;
  ValueCounts length_with_trademark;  // |e2LD|
  ValueCounts residual_length;        // |e2LD| - |trademark|
  ValueCounts tokens_per_domain;
  ValueCounts words_per_domain;
  std::map<std::size_t, TokenMix> by_token_count;
  std::map<std::string, WordCounts> words_by_category;
  WordCounts words_overall;

  void merge(const LexicalStats& other);

  friend bool operator==(const LexicalStats&, const LexicalStats&) = default;
};

// Per-entry contribution; lexical_report is the merge over entries.
LexicalStats lexical_stats_for(const LexicalEntry& entry, const UnigramModel& model,
                               const DictionarySet& dicts);

// Serial reference. Entries are deduplicated first.
LexicalStats lexical_report(std::vector<LexicalEntry> entries, const UnigramModel& model,
                            const DictionarySet& dicts);

// Highest counts first, ties broken alphabetically.
std::vector<std::pair<std::string, std::uint64_t>> top_words(const WordCounts& counts,
                                                             std::size_t k);

nlohmann::json lexical_summary_json(const LexicalStats& stats, std::size_t top_k);

}  // namespace squatscope
