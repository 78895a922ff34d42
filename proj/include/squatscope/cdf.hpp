#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace squatscope {

struct CdfPoint {
  std::int64_t x = 0;
  double fraction = 0.0;  // P(X <= x)

  friend bool operator==(const CdfPoint&, const CdfPoint&) = default;
};

// Exact integer-valued distribution; merging two shards' counts gives the
// counts of their union, so any CDF derived from it is mergeable.
class ValueCounts {
 public:
  void add(std::int64_t value, std::uint64_t n = 1) { counts_[value] += n; total_ += n; }

  void merge(const ValueCounts& other) {
    for (const auto& [v, n] : other.counts_) add(v, n);
  }

  std::uint64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  const std::map<std::int64_t, std::uint64_t>& counts() const { return counts_; }

  // One point per distinct value, nondecreasing, ending at 1.0.
  std::vector<CdfPoint> cdf() const {
    std::vector<CdfPoint> out;
    out.reserve(counts_.size());
    std::uint64_t run = 0;
    for (const auto& [v, n] : counts_) {
      run += n;
      out.push_back({v, static_cast<double>(run) / static_cast<double>(total_)});
    }
    return out;
  }

  friend bool operator==(const ValueCounts&, const ValueCounts&) = default;

 private:
  std::map<std::int64_t, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

}  // namespace squatscope
