#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace squatscope {

struct Occurrence {
  std::uint32_t pattern;  // index into TrademarkAutomaton::patterns()
  std::uint32_t offset;   // start of the occurrence in the scanned text

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// Aho-Corasick automaton over the DNS label alphabet [a-z0-9_-.], compiled to
// a dense DFA so that scanning costs one table lookup per input byte
// whatever the number of patterns. Bytes outside the alphabet send the scan
// back to the root. Immutable after construction.
class TrademarkAutomaton {
 public:
  TrademarkAutomaton() : TrademarkAutomaton(std::vector<std::string>{}) {}

  // Patterns are deduplicated and sorted; an empty pattern is ignored.
  explicit TrademarkAutomaton(std::vector<std::string> patterns);

  const std::vector<std::string>& patterns() const { return patterns_; }
  std::size_t state_count() const { return terminal_.size(); }

  // Calls on_match(pattern_index, offset) for every occurrence, in order of
  // occurrence end position; longer patterns first among equal ends.
  template <class F>
  void scan(std::string_view text, F&& on_match) const {
    std::uint32_t state = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      state = next_[state * kSymbols + symbol_of(text[i])];
      for (std::uint32_t s = terminal_[state] != kNone ? state : dict_link_[state]; s != kNone;
           s = dict_link_[s]) {
        const std::uint32_t p = terminal_[s];
        on_match(p, static_cast<std::uint32_t>(i + 1 - patterns_[p].size()));
      }
    }
  }

  // Every occurrence, sorted by (pattern, offset).
  std::vector<Occurrence> find_all(std::string_view text) const;

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  static constexpr std::size_t kSymbols = 40;

  static std::uint32_t symbol_of(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u >= 'a' && u <= 'z') return 1 + (u - 'a');
    if (u >= '0' && u <= '9') return 27 + (u - '0');
    if (u == '-') return 37;
    if (u == '_') return 38;
    if (u == '.') return 39;
    return 0;
  }

  std::vector<std::string> patterns_;
  std::vector<std::uint32_t> next_;       // state * kSymbols + symbol -> state
  std::vector<std::uint32_t> terminal_;   // pattern ending here, or kNone
  std::vector<std::uint32_t> dict_link_;  // nearest proper-suffix state that is terminal
};

}  // namespace squatscope
