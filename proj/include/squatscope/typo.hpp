#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "squatscope/keyboard.hpp"
#include "squatscope/strings.hpp"

namespace squatscope {

// The five single-edit typosquatting models.
//
//   MissingDot       "www" + t (the dot after www dropped)
//   CharOmission     delete t[i]
//   CharPermutation  swap t[i] and t[i+1]
//   CharReplacement  t[i] -> any key adjacent to t[i]
//   CharInsertion    insert, directly before or after t[i], either t[i]
//                    itself or a key adjacent to t[i]
enum class TypoModel : std::uint8_t {
  MissingDot,
  CharOmission,
  CharPermutation,
  CharReplacement,
  CharInsertion,
};

inline constexpr std::size_t kTypoModelCount = 5;
inline constexpr std::array<TypoModel, kTypoModelCount> kAllTypoModels = {
    TypoModel::MissingDot, TypoModel::CharOmission, TypoModel::CharPermutation,
    TypoModel::CharReplacement, TypoModel::CharInsertion};

const char* to_string(TypoModel model);

class TypoError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TypoSet {
  std::string trademark;
  std::vector<std::string> variants;  // sorted, unique, never contains trademark
  std::array<std::size_t, kTypoModelCount> per_model_counts{};  // distinct per model

  bool contains(std::string_view candidate) const;
  std::size_t count(TypoModel m) const { return per_model_counts[static_cast<std::size_t>(m)]; }
};

// Throws TypoError when the trademark is shorter than two characters.
TypoSet generate_typos(std::string_view trademark, const Keyboard& keyboard);

// Membership in generate_typos(trademark) without materializing the set.
bool is_typo(std::string_view candidate, std::string_view trademark, const Keyboard& keyboard);

struct TypoBound {
  std::vector<std::pair<std::string, std::size_t>> per_trademark;  // input order
  std::size_t total = 0;  // size of the union across trademarks
};

// Serial reference; see kernels.hpp for the parallel version.
TypoBound typo_upper_bound(std::span<const std::string> trademarks, const Keyboard& keyboard);

// Reverse map from every typo variant to the trademarks that generate it.
class TypoIndex {
 public:
  TypoIndex() = default;
  TypoIndex(std::span<const std::string> trademarks, const Keyboard& keyboard);

  // Indices into the trademark list, ascending.
  std::span<const std::uint32_t> lookup(std::string_view candidate) const;

  std::size_t size() const { return index_.size(); }

 private:
  StringMap<std::vector<std::uint32_t>> index_;
};

}  // namespace squatscope
