#include "squatscope/typo.hpp"

#include <algorithm>

namespace squatscope {

const char* to_string(TypoModel model) {
  switch (model) {
    case TypoModel::MissingDot: return "MissingDot";
    case TypoModel::CharOmission: return "CharOmission";
    case TypoModel::CharPermutation: return "CharPermutation";
    case TypoModel::CharReplacement: return "CharReplacement";
    case TypoModel::CharInsertion: return "CharInsertion";
  }
  return "Unknown";
}

bool TypoSet::contains(std::string_view candidate) const {
  return std::binary_search(variants.begin(), variants.end(), candidate);
}

namespace {

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Can `c` be inserted at gap `gap` (0..n) of t? The gap touches t[gap-1]
// on its left and t[gap] on its right.
bool insertable(std::string_view t, std::size_t gap, char c, const Keyboard& kb) {
  auto fits = [&](char key) { return c == key || kb.adjacent(key, c); };
  return (gap > 0 && fits(t[gap - 1])) || (gap < t.size() && fits(t[gap]));
}

}  // namespace

TypoSet generate_typos(std::string_view trademark, const Keyboard& keyboard) {
  if (trademark.size() < 2) {
    throw TypoError("TrademarkTooShort: '" + std::string(trademark) + "'");
  }
  const std::string t(trademark);
  const std::size_t n = t.size();
  std::array<std::vector<std::string>, kTypoModelCount> by_model;
  auto& dot = by_model[static_cast<std::size_t>(TypoModel::MissingDot)];
  auto& omit = by_model[static_cast<std::size_t>(TypoModel::CharOmission)];
  auto& perm = by_model[static_cast<std::size_t>(TypoModel::CharPermutation)];
  auto& repl = by_model[static_cast<std::size_t>(TypoModel::CharReplacement)];
  auto& ins = by_model[static_cast<std::size_t>(TypoModel::CharInsertion)];

  dot.push_back("www" + t);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = t;
    s.erase(i, 1);
    omit.push_back(std::move(s));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::string s = t;
    std::swap(s[i], s[i + 1]);
    perm.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (char c : keyboard.neighbors(t[i])) {
      std::string s = t;
      s[i] = c;
      repl.push_back(std::move(s));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::string keys(1, t[i]);
    keys += keyboard.neighbors(t[i]);
    for (char c : keys) {
      ins.push_back(t.substr(0, i) + c + t.substr(i));
      ins.push_back(t.substr(0, i + 1) + c + t.substr(i + 1));
    }
  }

  TypoSet out;
  out.trademark = t;
  for (std::size_t m = 0; m < kTypoModelCount; ++m) {
    auto& v = by_model[m];
    sort_unique(v);
    v.erase(std::remove(v.begin(), v.end(), t), v.end());
    out.per_model_counts[m] = v.size();
    out.variants.insert(out.variants.end(), v.begin(), v.end());
  }
  sort_unique(out.variants);
  return out;
}

bool is_typo(std::string_view candidate, std::string_view trademark, const Keyboard& keyboard) {
  const std::size_t n = trademark.size();
  const std::size_t m = candidate.size();
  if (n < 2 || candidate == trademark) return false;

  if (m == n + 3 && candidate.starts_with("www") && candidate.substr(3) == trademark) return true;

  std::size_t prefix = 0;
  const std::size_t shorter = std::min(n, m);
  while (prefix < shorter && candidate[prefix] == trademark[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < shorter && candidate[m - 1 - suffix] == trademark[n - 1 - suffix]) ++suffix;

  if (m + 1 == n) {
    // Omission: candidate == t minus t[i] for some i with i <= prefix and
    // the tail t[i+1..] matching the candidate's tail.
    return prefix + suffix >= m;
  }
  if (m == n) {
    const std::size_t i = prefix;  // first mismatch; i < n since candidate != t
    if (i + 1 + suffix >= n && keyboard.adjacent(trademark[i], candidate[i])) return true;
    return i + 1 < n && candidate[i] == trademark[i + 1] && candidate[i + 1] == trademark[i] &&
           i + 2 + suffix >= n;
  }
  if (m == n + 1) {
    // candidate[j] is the inserted character for any j with
    // candidate[0..j) == t[0..j) and candidate(j..] == t[j..).
    const std::size_t lo = n > suffix ? n - suffix : 0;
    const std::size_t hi = std::min(prefix, n);
    for (std::size_t j = lo; j <= hi; ++j) {
      if (insertable(trademark, j, candidate[j], keyboard)) return true;
    }
  }
  return false;
}

TypoBound typo_upper_bound(std::span<const std::string> trademarks, const Keyboard& keyboard) {
  TypoBound bound;
  StringSet all;
  for (const auto& t : trademarks) {
    TypoSet set = generate_typos(t, keyboard);
    bound.per_trademark.emplace_back(t, set.variants.size());
    for (auto& v : set.variants) all.insert(std::move(v));
  }
  bound.total = all.size();
  return bound;
}

TypoIndex::TypoIndex(std::span<const std::string> trademarks, const Keyboard& keyboard) {
  for (std::uint32_t id = 0; id < trademarks.size(); ++id) {
    if (trademarks[id].size() < 2) continue;
    for (auto& v : generate_typos(trademarks[id], keyboard).variants) {
      index_[std::move(v)].push_back(id);
    }
  }
}

std::span<const std::uint32_t> TypoIndex::lookup(std::string_view candidate) const {
  auto it = index_.find(candidate);
  if (it == index_.end()) return {};
  return it->second;
}

}  // namespace squatscope
