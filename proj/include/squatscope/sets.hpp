#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "squatscope/records.hpp"
#include "squatscope/scan.hpp"

namespace squatscope {

// Registrable domain -> trademarks it combosquats.
class DomainSet {
 public:
  void add(const std::string& domain, const std::string& trademark) {
    members_[domain].insert(trademark);
  }
  void add_all(const DomainSet& other);

  bool contains(std::string_view domain) const { return members_.find(domain) != members_.end(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  const std::map<std::string, std::set<std::string>, std::less<>>& members() const {
    return members_;
  }

  DomainSet intersect(const DomainSet& other) const;

  // Distinct trademarks / business categories among the members.
  std::size_t trademark_count() const;
  std::size_t category_count(const std::map<std::string, std::string>& category_of) const;

  friend bool operator==(const DomainSet&, const DomainSet&) = default;

 private:
  std::map<std::string, std::set<std::string>, std::less<>> members_;
};

struct SetRow {
  std::string name;  // CP, CA, C_mal, ...
  std::size_t count = 0, not_count = 0, noc = 0;
  std::size_t cp_count = 0, cp_not = 0, cp_noc = 0;
  std::size_t ca_count = 0, ca_not = 0, ca_noc = 0;
};

struct DerivedSets {
  DomainSet cp, ca;
  DomainSet c_mal, c_pbl, c_apt, c_spa, c_ale;
  DomainSet c_abuse;  // c_mal ∪ c_pbl ∪ c_apt ∪ c_spa

  // Earliest label date per source for every labelled combosquatting domain.
  std::map<LabelSource, std::map<std::string, Day>> first_label;

  std::uint64_t labels_in = 0;
  std::uint64_t labels_skipped = 0;  // domain did not parse

  const DomainSet& labelled(LabelSource source) const;

  // Table-style summary: one row per set with its size, distinct trademarks
  // and categories, and the same three figures for its intersections with
  // CP and CA.
  std::vector<SetRow> summary(std::span<const TrademarkSeed> seeds) const;

  friend bool operator==(const DerivedSets&, const DerivedSets&) = default;
};

// CP/CA are the registrable domains of pDNS/aDNS hits with a Combosquatting
// verdict. Each label event's domain is classified on its own; those with a
// Combosquatting verdict join the set of their source. A labelled FQDN taints
// its registrable domain. Order of the inputs does not matter.
DerivedSets derive_sets(std::span<const ScanHit> pdns_hits, std::span<const ScanHit> adns_hits,
                        std::span<const LabelEvent> labels, const ScanContext& ctx);

std::map<std::string, std::string> category_map(std::span<const TrademarkSeed> seeds);

}  // namespace squatscope
