#include "squatscope/certs.hpp"

namespace squatscope {

void CertStats::merge(const CertStats& o) {
  certs_in += o.certs_in;
  names_skipped += o.names_skipped;
  combo_certs += o.combo_certs;
  typo_certs += o.typo_certs;
  combo_fqdns.insert(o.combo_fqdns.begin(), o.combo_fqdns.end());
  typo_fqdns.insert(o.typo_fqdns.begin(), o.typo_fqdns.end());
  for (const auto& [k, n] : o.combo_issuers) combo_issuers[k] += n;
  for (const auto& [k, n] : o.typo_issuers) typo_issuers[k] += n;
}

std::map<std::string, double> CertStats::combo_issuer_share() const {
  std::map<std::string, double> out;
  for (const auto& [issuer, n] : combo_issuers) {
    out[issuer] = static_cast<double>(n) / static_cast<double>(combo_certs);
  }
  return out;
}

nlohmann::json CertStats::to_json() const {
  nlohmann::json j;
  j["certs_in"] = certs_in;
  j["names_skipped"] = names_skipped;
  j["combo_certs"] = combo_certs;
  j["combo_fqdns"] = combo_fqdns.size();
  j["typo_certs"] = typo_certs;
  j["typo_fqdns"] = typo_fqdns.size();
  j["combo_issuer_share"] = combo_issuer_share();
  j["combo_issuers"] = combo_issuers;
  j["typo_issuers"] = typo_issuers;
  return j;
}

CertStats cert_scan(std::span<const CertRecord> certs, const ScanContext& ctx) {
  CertStats stats;
  ScanOptions opts = ctx.options;
  opts.include_typos = true;
  for (const auto& cert : certs) {
    ++stats.certs_in;
    bool combo = false, typo = false;
    for (std::string_view n : cert.names) {
      if (n.starts_with("*.")) n.remove_prefix(2);
      auto name = try_parse_domain(n, ctx.suffixes);
      if (!name) {
        ++stats.names_skipped;
        continue;
      }
      for (const auto& v : name_verdicts(*name, ctx.matcher, opts)) {
        if (v.kind == SquatKind::Combosquatting) {
          combo = true;
          stats.combo_fqdns.insert(name->fqdn);
        } else if (v.kind == SquatKind::Typosquatting) {
          typo = true;
          stats.typo_fqdns.insert(name->fqdn);
        }
      }
    }
    if (combo) {
      ++stats.combo_certs;
      ++stats.combo_issuers[cert.issuer];
    }
    if (typo) {
      ++stats.typo_certs;
      ++stats.typo_issuers[cert.issuer];
    }
  }
  return stats;
}

}  // namespace squatscope
