#include "squatscope/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace squatscope {

namespace {

int thread_count(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

ScanStats scan_parallel(std::span<const DnsObservation> records, const ScanContext& ctx,
                        std::vector<ScanHit>& out, std::size_t shards, int threads) {
  shards = std::max<std::size_t>(1, std::min(shards, std::max<std::size_t>(1, records.size())));
  std::vector<std::vector<ScanHit>> parts(shards);
  std::vector<ScanStats> stats(shards);
  const std::size_t n = records.size();

#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(threads))
  for (std::size_t s = 0; s < shards; ++s) {
    const std::size_t lo = n * s / shards;
    const std::size_t hi = n * (s + 1) / shards;
    parts[s] = {};
    stats[s] = scan_stream(records.subspan(lo, hi - lo), ctx, parts[s]);
  }

  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  out.reserve(out.size() + total);
  ScanStats merged;
  for (std::size_t s = 0; s < shards; ++s) {
    std::move(parts[s].begin(), parts[s].end(), std::back_inserter(out));
    merged.merge(stats[s]);
  }
  return merged;
}

TypoBound typo_upper_bound_parallel(std::span<const std::string> trademarks,
                                    const Keyboard& keyboard, int threads) {
  const std::size_t n = trademarks.size();
  std::vector<std::vector<std::string>> variants(n);

#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count(threads))
  for (std::size_t i = 0; i < n; ++i) {
    variants[i] = generate_typos(trademarks[i], keyboard).variants;
  }

  TypoBound bound;
  std::vector<std::string> all;
  for (std::size_t i = 0; i < n; ++i) {
    bound.per_trademark.emplace_back(trademarks[i], variants[i].size());
    all.insert(all.end(), std::make_move_iterator(variants[i].begin()),
               std::make_move_iterator(variants[i].end()));
  }
  std::sort(all.begin(), all.end());
  bound.total = static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  return bound;
}

LexicalStats lexical_report_parallel(std::vector<LexicalEntry> entries, const UnigramModel& model,
                                     const DictionarySet& dicts, int threads) {
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  const int t = thread_count(threads);
  std::vector<LexicalStats> partial(static_cast<std::size_t>(t));

#pragma omp parallel num_threads(t)
  {
    auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
    for (std::size_t i = 0; i < entries.size(); ++i) {
      mine.merge(lexical_stats_for(entries[i], model, dicts));
    }
  }

  LexicalStats total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace squatscope
