#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "squatscope/strings.hpp"

namespace squatscope {

enum class DomainErrc {
  EmptyInput,
  InvalidLabel,
  NoRegistrableDomain,
};

const char* to_string(DomainErrc code);

class DomainError : public std::runtime_error {
 public:
  DomainError(DomainErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  DomainErrc code() const noexcept { return code_; }

 private:
  DomainErrc code_;
};

// Public-suffix rule set in the de-facto public suffix list format: one rule
// per line, optional leading "*." (wildcard) or "!" (exception), comments
// introduced by "//" or "#". Immutable once built; share freely.
class SuffixList {
 public:
  SuffixList() = default;

  static SuffixList from_file(const std::filesystem::path& path);
  static SuffixList from_string(std::string_view text, std::string version = {});

  void add_rule(std::string_view rule);

  // Longest applicable public suffix of a normalized lowercase name. Unknown
  // TLDs fall back to the rightmost label. The returned view aliases fqdn.
  std::string_view lookup(std::string_view fqdn) const;

  const std::vector<std::string>& rules() const { return rules_; }
  const std::string& version() const { return version_; }
  std::size_t size() const { return rules_.size(); }

 private:
  std::vector<std::string> rules_;
  StringSet exact_;
  StringSet wildcard_;   // "*.ck" stored as "ck"
  StringSet exception_;  // "!www.ck" stored as "www.ck"
  std::string version_;
};

std::string suffix_lookup(std::string_view fqdn, const SuffixList& suffixes);

// Normalized FQDN split at the public suffix. `labels` holds the labels left
// of the suffix, so labels.back() is the e2LD.
struct DomainName {
  std::string raw;
  std::vector<std::string> labels;
  std::string public_suffix;
  std::string e2ld;
  std::string fqdn;

  // e2LD plus public suffix, e.g. "youtube-login.com". Sets and timelines
  // are keyed on this.
  std::string registrable() const { return e2ld + "." + public_suffix; }

  // Compares the normalized parts only; `raw` is provenance.
  friend bool operator==(const DomainName& a, const DomainName& b) {
    return a.labels == b.labels && a.public_suffix == b.public_suffix &&
           a.e2ld == b.e2ld && a.fqdn == b.fqdn;
  }
};

// Throws DomainError.
DomainName parse_domain(std::string_view input, const SuffixList& suffixes);

// Non-throwing variant for per-record hot paths.
std::optional<DomainName> try_parse_domain(std::string_view input, const SuffixList& suffixes,
                                           DomainErrc* error = nullptr);

bool is_label_char(char c);

}  // namespace squatscope
