#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "squatscope/strings.hpp"

namespace squatscope {

// Unigram language model for word segmentation. Known tokens have
// probability count/total; an unknown token of length L gets
// 10 / (total * 10^L), so long unknown strings are heavily penalized.
class UnigramModel {
 public:
  UnigramModel() = default;

  // Lines of `token<TAB>count`; '#' comments.
  static UnigramModel from_file(const std::filesystem::path& path);
  static UnigramModel from_string(std::string_view text);

  void add(std::string_view token, std::uint64_t count);

  double log_prob(std::string_view token) const;
  double log_prob_unknown(std::size_t length) const;
  bool contains(std::string_view token) const { return counts_.contains(token); }

  std::uint64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }

 private:
  StringMap<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

struct Tokenization {
  std::vector<std::string> tokens;  // concatenation reproduces the input
  double score = 0.0;               // sum of per-token log probabilities
  std::vector<bool> word_flags;     // filled by classify_tokens
};

// Maximum-probability split over all 2^(n-1) segmentations, computed by
// dynamic programming over split points. Ties go to the fewest tokens, then
// the lexicographically smallest token sequence.
Tokenization segment(std::string_view input, const UnigramModel& model);

}  // namespace squatscope
