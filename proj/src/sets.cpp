#include "squatscope/sets.hpp"

namespace squatscope {

void DomainSet::add_all(const DomainSet& other) {
  for (const auto& [d, ts] : other.members_) members_[d].insert(ts.begin(), ts.end());
}

DomainSet DomainSet::intersect(const DomainSet& other) const {
  DomainSet out;
  for (const auto& [d, ts] : members_) {
    if (other.contains(d)) out.members_.emplace(d, ts);
  }
  return out;
}

std::size_t DomainSet::trademark_count() const {
  std::set<std::string_view> ts;
  for (const auto& [d, m] : members_) ts.insert(m.begin(), m.end());
  return ts.size();
}

std::size_t DomainSet::category_count(const std::map<std::string, std::string>& category_of) const {
  std::set<std::string_view> cats;
  for (const auto& [d, m] : members_) {
    for (const auto& t : m) {
      if (auto it = category_of.find(t); it != category_of.end()) cats.insert(it->second);
    }
  }
  return cats.size();
}

std::map<std::string, std::string> category_map(std::span<const TrademarkSeed> seeds) {
  std::map<std::string, std::string> out;
  for (const auto& s : seeds) out[s.trademark] = s.category;
  return out;
}

const DomainSet& DerivedSets::labelled(LabelSource source) const {
  switch (source) {
    case LabelSource::PBL: return c_pbl;
    case LabelSource::MAL: return c_mal;
    case LabelSource::SPA: return c_spa;
    case LabelSource::APT: return c_apt;
    case LabelSource::ALE: return c_ale;
  }
  return c_pbl;
}

std::vector<SetRow> DerivedSets::summary(std::span<const TrademarkSeed> seeds) const {
  const auto cats = category_map(seeds);
  auto row = [&](std::string name, const DomainSet& s, bool cross) {
    SetRow r;
    r.name = std::move(name);
    r.count = s.size();
    r.not_count = s.trademark_count();
    r.noc = s.category_count(cats);
    if (cross) {
      auto in_cp = s.intersect(cp);
      auto in_ca = s.intersect(ca);
      r.cp_count = in_cp.size();
      r.cp_not = in_cp.trademark_count();
      r.cp_noc = in_cp.category_count(cats);
      r.ca_count = in_ca.size();
      r.ca_not = in_ca.trademark_count();
      r.ca_noc = in_ca.category_count(cats);
    }
    return r;
  };
  return {row("CP", cp, false),         row("CA", ca, false),
          row("C_mal", c_mal, true),    row("C_pbl", c_pbl, true),
          row("C_apt", c_apt, true),    row("C_spa", c_spa, true),
          row("C_abuse", c_abuse, true), row("C_ale", c_ale, true)};
}

namespace {

void collect(std::span<const ScanHit> hits, DomainSet& out) {
  for (const auto& h : hits) {
    for (const auto& v : h.verdicts) {
      if (v.kind == SquatKind::Combosquatting) out.add(h.registrable, v.trademark);
    }
  }
}

DomainSet& target(DerivedSets& s, LabelSource source) {
  switch (source) {
    case LabelSource::PBL: return s.c_pbl;
    case LabelSource::MAL: return s.c_mal;
    case LabelSource::SPA: return s.c_spa;
    case LabelSource::APT: return s.c_apt;
    case LabelSource::ALE: return s.c_ale;
  }
  return s.c_pbl;
}

}  // namespace

DerivedSets derive_sets(std::span<const ScanHit> pdns_hits, std::span<const ScanHit> adns_hits,
                        std::span<const LabelEvent> labels, const ScanContext& ctx) {
  DerivedSets s;
  collect(pdns_hits, s.cp);
  collect(adns_hits, s.ca);

  ScanOptions opts = ctx.options;
  opts.include_typos = false;
  for (const auto& ev : labels) {
    ++s.labels_in;
    auto name = try_parse_domain(ev.domain, ctx.suffixes);
    if (!name) {
      ++s.labels_skipped;
      continue;
    }
    auto verdicts = name_verdicts(*name, ctx.matcher, opts);
    if (verdicts.empty()) continue;
    const std::string reg = name->registrable();
    for (const auto& v : verdicts) target(s, ev.source).add(reg, v.trademark);
    auto& first = s.first_label[ev.source];
    auto [it, inserted] = first.try_emplace(reg, ev.date);
    if (!inserted && ev.date < it->second) it->second = ev.date;
  }

  for (auto src : {LabelSource::MAL, LabelSource::PBL, LabelSource::APT, LabelSource::SPA}) {
    s.c_abuse.add_all(s.labelled(src));
  }
  return s;
}

}  // namespace squatscope
