#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>

#include "json.hpp"

#include "squatscope/records.hpp"
#include "squatscope/scan.hpp"

namespace squatscope {

struct CertStats {
  std::uint64_t certs_in = 0;
  std::uint64_t names_skipped = 0;  // names that failed to parse
  std::uint64_t combo_certs = 0;    // certificates naming >= 1 combosquatting FQDN
  std::uint64_t typo_certs = 0;     // certificates naming >= 1 typosquatting FQDN
  std::set<std::string> combo_fqdns;
  std::set<std::string> typo_fqdns;
  std::map<std::string, std::uint64_t> combo_issuers;  // combo certificates per issuer
  std::map<std::string, std::uint64_t> typo_issuers;

  void merge(const CertStats& other);

  // Fraction of combosquatting certificates issued by each issuer.
  std::map<std::string, double> combo_issuer_share() const;

  nlohmann::json to_json() const;

  friend bool operator==(const CertStats&, const CertStats&) = default;
};

// Wildcard names ("*.x.com") are matched on the name below the wildcard.
CertStats cert_scan(std::span<const CertRecord> certs, const ScanContext& ctx);

}  // namespace squatscope
