#pragma once

#include <span>
#include <string>
#include <vector>

#include "squatscope/keyboard.hpp"
#include "squatscope/lexical.hpp"
#include "squatscope/scan.hpp"
#include "squatscope/typo.hpp"

namespace squatscope {

// OpenMP versions of the serial kernels. Each produces exactly the result of
// its serial reference: work is cut into contiguous shards whose partial
// results are combined in shard order. threads == 0 uses the OpenMP default.

// Same hits, in the same order, and same stats as scan_stream.
ScanStats scan_parallel(std::span<const DnsObservation> records, const ScanContext& ctx,
                        std::vector<ScanHit>& out, std::size_t shards, int threads = 0);

TypoBound typo_upper_bound_parallel(std::span<const std::string> trademarks,
                                    const Keyboard& keyboard, int threads = 0);

LexicalStats lexical_report_parallel(std::vector<LexicalEntry> entries, const UnigramModel& model,
                                     const DictionarySet& dicts, int threads = 0);

}  // namespace squatscope
