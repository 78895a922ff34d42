#include "squatscope/classifier.hpp"

#include <algorithm>

namespace squatscope {

const char* to_string(SquatKind kind) {
  switch (kind) {
    case SquatKind::Exact: return "Exact";
    case SquatKind::Typosquatting: return "Typosquatting";
    case SquatKind::Combosquatting: return "Combosquatting";
    case SquatKind::Unrelated: return "Unrelated";
  }
  return "Unknown";
}

std::optional<SquatKind> parse_squat_kind(std::string_view text) {
  for (auto k : {SquatKind::Exact, SquatKind::Typosquatting, SquatKind::Combosquatting,
                 SquatKind::Unrelated}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

SquatVerdict classify(std::string_view candidate_e2ld, std::string_view trademark,
                      const Keyboard& keyboard) {
  SquatVerdict v;
  v.trademark = std::string(trademark);
  if (candidate_e2ld == trademark) {
    v.kind = SquatKind::Exact;
    v.match_span = Span{0, static_cast<std::uint32_t>(trademark.size())};
    return v;
  }
  if (is_typo(candidate_e2ld, trademark, keyboard)) {
    v.kind = SquatKind::Typosquatting;
    return v;
  }
  if (auto pos = candidate_e2ld.find(trademark);
      !trademark.empty() && pos != std::string_view::npos) {
    v.kind = SquatKind::Combosquatting;
    v.match_span = Span{static_cast<std::uint32_t>(pos),
                        static_cast<std::uint32_t>(pos + trademark.size())};
    return v;
  }
  v.kind = SquatKind::Unrelated;
  return v;
}

SquatMatcher::SquatMatcher(std::vector<std::string> trademarks, const Keyboard& keyboard)
    : keyboard_(keyboard),
      automaton_(std::move(trademarks)),
      typos_(automaton_.patterns(), keyboard_) {}

std::vector<SquatVerdict> SquatMatcher::classify_multi(std::string_view candidate) const {
  std::vector<Occurrence> hits;
  automaton_.scan(candidate,
                  [&](std::uint32_t p, std::uint32_t off) { hits.push_back({p, off}); });
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end(),
                         [](const Occurrence& a, const Occurrence& b) {
                           return a.pattern == b.pattern;
                         }),
             hits.end());

  const auto& names = automaton_.patterns();
  std::vector<SquatVerdict> out;
  auto typo_ids = typos_.lookup(candidate);
  out.reserve(hits.size() + typo_ids.size());

  // Both lists are ascending in pattern index, i.e. in trademark order.
  std::size_t h = 0, t = 0;
  while (h < hits.size() || t < typo_ids.size()) {
    if (t == typo_ids.size() || (h < hits.size() && hits[h].pattern <= typo_ids[t])) {
      const auto& hit = hits[h];
      const std::string& tm = names[hit.pattern];
      SquatVerdict v;
      v.trademark = tm;
      if (t < typo_ids.size() && typo_ids[t] == hit.pattern) {
        v.kind = SquatKind::Typosquatting;
        ++t;
      } else if (candidate.size() == tm.size()) {
        v.kind = SquatKind::Exact;
        v.match_span = Span{0, static_cast<std::uint32_t>(tm.size())};
      } else {
        v.kind = SquatKind::Combosquatting;
        v.match_span = Span{hit.offset, static_cast<std::uint32_t>(hit.offset + tm.size())};
      }
      out.push_back(std::move(v));
      ++h;
    } else {
      out.push_back(SquatVerdict{SquatKind::Typosquatting, names[typo_ids[t]], std::nullopt});
      ++t;
    }
  }
  return out;
}

std::vector<SquatVerdict> classify_multi(std::string_view candidate_e2ld,
                                         const SquatMatcher& matcher) {
  return matcher.classify_multi(candidate_e2ld);
}

}  // namespace squatscope
