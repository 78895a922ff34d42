#include "squatscope/records.hpp"

#include "squatscope/strings.hpp"

namespace squatscope {

std::optional<std::string_view> canonical_category(std::string_view name) {
  const std::string wanted = to_lower_ascii(trim(name));
  for (auto c : kBusinessCategories) {
    if (to_lower_ascii(c) == wanted) return c;
  }
  return std::nullopt;
}

const char* to_string(SeedOrigin origin) {
  switch (origin) {
    case SeedOrigin::AlexaTop500: return "AlexaTop500";
    case SeedOrigin::ManualPolitics: return "ManualPolitics";
    case SeedOrigin::ManualEnergy: return "ManualEnergy";
  }
  return "Unknown";
}

std::optional<SeedOrigin> parse_seed_origin(std::string_view text) {
  const std::string t = to_lower_ascii(trim(text));
  if (t.empty() || t == "alexatop500") return SeedOrigin::AlexaTop500;
  if (t == "manualpolitics") return SeedOrigin::ManualPolitics;
  if (t == "manualenergy") return SeedOrigin::ManualEnergy;
  return std::nullopt;
}

const char* to_string(DnsSource source) {
  return source == DnsSource::Passive ? "pdns" : "adns";
}

const char* to_string(LabelSource source) {
  switch (source) {
    case LabelSource::PBL: return "pbl";
    case LabelSource::MAL: return "mal";
    case LabelSource::SPA: return "spa";
    case LabelSource::APT: return "apt";
    case LabelSource::ALE: return "ale";
  }
  return "unknown";
}

std::optional<LabelSource> parse_label_source(std::string_view text) {
  const std::string t = to_lower_ascii(trim(text));
  for (auto s : kAllLabelSources) {
    if (t == to_string(s)) return s;
  }
  return std::nullopt;
}

}  // namespace squatscope
