#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "squatscope/automaton.hpp"
#include "squatscope/keyboard.hpp"
#include "squatscope/typo.hpp"

namespace squatscope {

enum class SquatKind : std::uint8_t {
  Exact,
  Typosquatting,
  Combosquatting,
  Unrelated,
};

const char* to_string(SquatKind kind);
std::optional<SquatKind> parse_squat_kind(std::string_view text);

struct Span {
  std::uint32_t start = 0;
  std::uint32_t end = 0;  // one past the last character

  friend bool operator==(const Span&, const Span&) = default;
};

struct SquatVerdict {
  SquatKind kind = SquatKind::Unrelated;
  std::string trademark;
  std::optional<Span> match_span;  // set iff kind is Combosquatting or Exact

  friend bool operator==(const SquatVerdict&, const SquatVerdict&) = default;
};

// Verdict of one candidate e2LD against one trademark e2LD. Precedence:
// identical -> Exact; reachable by one typo edit -> Typosquatting; contains
// the trademark -> Combosquatting; otherwise Unrelated.
SquatVerdict classify(std::string_view candidate_e2ld, std::string_view trademark,
                      const Keyboard& keyboard);

// Classifies a candidate against a whole seed list in one pass: containment
// through the Aho-Corasick automaton and typo membership through a
// precomputed variant index, so per-candidate cost does not grow with the
// number of trademarks.
class SquatMatcher {
 public:
  SquatMatcher(std::vector<std::string> trademarks, const Keyboard& keyboard);

  const TrademarkAutomaton& automaton() const { return automaton_; }
  const std::vector<std::string>& trademarks() const { return automaton_.patterns(); }
  const Keyboard& keyboard() const { return keyboard_; }

  // One verdict per trademark for which classify() is not Unrelated, ordered
  // by trademark. Combosquatting and Exact spans point at the first
  // occurrence.
  std::vector<SquatVerdict> classify_multi(std::string_view candidate_e2ld) const;

 private:
  Keyboard keyboard_;
  TrademarkAutomaton automaton_;
  TypoIndex typos_;
};

// Free-function form mirroring classify().
std::vector<SquatVerdict> classify_multi(std::string_view candidate_e2ld,
                                         const SquatMatcher& matcher);

}  // namespace squatscope
