#pragma once

#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "squatscope/analytics.hpp"
#include "squatscope/certs.hpp"
#include "squatscope/lexical.hpp"
#include "squatscope/sets.hpp"

namespace squatscope::cli {

// Minimal CSV builder; fields containing ',', '"' or newlines are quoted.
class Csv {
 public:
  explicit Csv(std::initializer_list<std::string_view> header);
  void row(std::initializer_list<std::string> fields);
  const std::string& str() const { return text_; }

 private:
  void append(std::string_view field, bool first);
  std::string text_;
};

// Fixed six-decimal rendering so outputs are byte-stable.
std::string num(double value);

void write_file(const std::filesystem::path& path, std::string_view text);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

void write_sets(const std::filesystem::path& dir, const DerivedSets& sets,
                std::span<const TrademarkSeed> seeds);

void write_lexical(const std::filesystem::path& dir, const LexicalStats& stats,
                   std::size_t top_k);

struct TemporalInputs {
  const TimelineMap& cp_timelines;
  const DerivedSets& sets;
  std::span<const ScanHit> all_hits;
  std::span<const TrademarkSeed> seeds;
  const std::vector<AlexaRow>* alexa = nullptr;  // registrable-domain keyed
};
void write_temporal(const std::filesystem::path& dir, const TemporalInputs& in);

void write_infra(const std::filesystem::path& dir, const ConcentrationReport& all,
                 const ConcentrationReport& abuse);

void write_certs(const std::filesystem::path& dir, const CertStats& stats,
                 const IngestStats& ingest);

}  // namespace squatscope::cli
