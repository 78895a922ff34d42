#include "squatscope/automaton.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace squatscope {

TrademarkAutomaton::TrademarkAutomaton(std::vector<std::string> patterns) {
  patterns.erase(std::remove(patterns.begin(), patterns.end(), std::string{}), patterns.end());
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  patterns_ = std::move(patterns);

  // Trie; transitions of kNone are filled in during the BFS below.
  next_.assign(kSymbols, kNone);
  terminal_.assign(1, kNone);
  for (std::uint32_t p = 0; p < patterns_.size(); ++p) {
    std::uint32_t state = 0;
    for (char c : patterns_[p]) {
      const std::uint32_t sym = symbol_of(c);
      if (sym == 0) {
        throw std::invalid_argument("pattern outside the DNS label alphabet: " + patterns_[p]);
      }
      std::uint32_t& slot = next_[state * kSymbols + sym];
      if (slot == kNone) {
        slot = static_cast<std::uint32_t>(terminal_.size());
        terminal_.push_back(kNone);
        next_.resize(next_.size() + kSymbols, kNone);
      }
      state = next_[state * kSymbols + sym];
    }
    terminal_[state] = p;
  }

  const std::size_t states = terminal_.size();
  std::vector<std::uint32_t> fail(states, 0);
  dict_link_.assign(states, kNone);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t sym = 0; sym < kSymbols; ++sym) {
    std::uint32_t& slot = next_[sym];
    if (slot == kNone) {
      slot = 0;
    } else {
      fail[slot] = 0;
      queue.push_back(slot);
    }
  }
  while (!queue.empty()) {
    const std::uint32_t s = queue.front();
    queue.pop_front();
    const std::uint32_t f = fail[s];
    dict_link_[s] = terminal_[f] != kNone ? f : dict_link_[f];
    for (std::uint32_t sym = 0; sym < kSymbols; ++sym) {
      std::uint32_t& slot = next_[s * kSymbols + sym];
      if (slot == kNone) {
        slot = next_[f * kSymbols + sym];
      } else {
        fail[slot] = next_[f * kSymbols + sym];
        queue.push_back(slot);
      }
    }
  }
  // Symbol 0 (out-of-alphabet byte) always resets to the root.
  for (std::size_t s = 0; s < states; ++s) next_[s * kSymbols] = 0;
}

std::vector<Occurrence> TrademarkAutomaton::find_all(std::string_view text) const {
  std::vector<Occurrence> out;
  scan(text, [&](std::uint32_t p, std::uint32_t off) { out.push_back({p, off}); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace squatscope
