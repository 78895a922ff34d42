#include "squatscope/segment.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "squatscope/fileio.hpp"

namespace squatscope {

UnigramModel UnigramModel::from_string(std::string_view text) {
  UnigramModel model;
  std::string error;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (!error.empty()) return;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') return;
    auto tab = line.find('\t');
    std::uint64_t count = 0;
    if (tab != std::string_view::npos) {
      auto c = trim(line.substr(tab + 1));
      auto [p, ec] = std::from_chars(c.data(), c.data() + c.size(), count);
      if (ec != std::errc{} || p != c.data() + c.size()) tab = std::string_view::npos;
    }
    if (tab == std::string_view::npos || trim(line.substr(0, tab)).empty()) {
      error = "unigram line " + std::to_string(lineno) + ": expected token<TAB>count";
      return;
    }
    model.add(trim(line.substr(0, tab)), count);
  });
  if (!error.empty()) throw std::runtime_error(error);
  return model;
}

UnigramModel UnigramModel::from_file(const std::filesystem::path& path) {
  return from_string(read_text_file(path));
}

void UnigramModel::add(std::string_view token, std::uint64_t count) {
  if (count == 0) return;
  auto [it, inserted] = counts_.try_emplace(to_lower_ascii(token), 0);
  it->second += count;
  total_ += count;
}

double UnigramModel::log_prob_unknown(std::size_t length) const {
  const double total = total_ == 0 ? 1.0 : static_cast<double>(total_);
  return std::log(10.0) - std::log(total) - static_cast<double>(length) * std::log(10.0);
}

double UnigramModel::log_prob(std::string_view token) const {
  auto it = counts_.find(token);
  if (it == counts_.end()) return log_prob_unknown(token.size());
  return std::log(static_cast<double>(it->second)) - std::log(static_cast<double>(total_));
}

namespace {

struct Cell {
  double score = -INFINITY;
  std::size_t ntokens = 0;
  std::size_t prev = 0;  // start of the last token
};

// Token sequence of the best split of input[0, end).
std::vector<std::string_view> tokens_of(const std::vector<Cell>& best, std::string_view input,
                                        std::size_t end) {
  std::vector<std::string_view> out;
  while (end > 0) {
    out.push_back(input.substr(best[end].prev, end - best[end].prev));
    end = best[end].prev;
  }
  return {out.rbegin(), out.rend()};
}

}  // namespace

Tokenization segment(std::string_view input, const UnigramModel& model) {
  const std::size_t n = input.size();
  std::vector<Cell> best(n + 1);
  best[0].score = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double score = best[j].score + model.log_prob(input.substr(j, i - j));
      const std::size_t ntokens = best[j].ntokens + 1;
      Cell& cur = best[i];
      bool take = j == 0 && cur.score == -INFINITY;
      if (!take) {
        if (score != cur.score) {
          take = score > cur.score;
        } else if (ntokens != cur.ntokens) {
          take = ntokens < cur.ntokens;
        } else {
          auto a = tokens_of(best, input, j);
          a.push_back(input.substr(j, i - j));
          auto b = tokens_of(best, input, cur.prev);
          b.push_back(input.substr(cur.prev, i - cur.prev));
          take = a < b;
        }
      }
      if (take) cur = Cell{score, ntokens, j};
    }
  }
  Tokenization t;
  for (auto tok : tokens_of(best, input, n)) t.tokens.emplace_back(tok);
  t.score = best[n].score;
  return t;
}

}  // namespace squatscope
