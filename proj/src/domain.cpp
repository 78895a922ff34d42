#include "squatscope/domain.hpp"

#include "squatscope/fileio.hpp"

namespace squatscope {

const char* to_string(DomainErrc code) {
  switch (code) {
    case DomainErrc::EmptyInput: return "EmptyInput";
    case DomainErrc::InvalidLabel: return "InvalidLabel";
    case DomainErrc::NoRegistrableDomain: return "NoRegistrableDomain";
  }
  return "Unknown";
}

bool is_label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
}

SuffixList SuffixList::from_file(const std::filesystem::path& path) {
  return from_string(read_text_file(path));
}

SuffixList SuffixList::from_string(std::string_view text, std::string version) {
  SuffixList list;
  list.version_ = std::move(version);
  for_each_line(text, [&](std::size_t, std::string_view line) {
    line = trim(line);
    if (line.empty()) return;
    if (line.starts_with("//") || line.starts_with("#")) {
      if (list.version_.empty()) {
        auto pos = line.find("VERSION:");
        if (pos != std::string_view::npos) list.version_ = std::string(trim(line.substr(pos + 8)));
      }
      return;
    }
    list.add_rule(line);
  });
  return list;
}

void SuffixList::add_rule(std::string_view rule) {
  // Only the first whitespace-delimited token of a line is the rule.
  rule = trim(rule);
  rule = rule.substr(0, rule.find_first_of(" \t"));
  if (rule.empty()) return;
  std::string r = to_lower_ascii(rule);
  if (r.starts_with("!")) {
    exception_.insert(r.substr(1));
  } else if (r.starts_with("*.")) {
    wildcard_.insert(r.substr(2));
  } else {
    exact_.insert(r);
  }
  rules_.push_back(std::move(r));
}

std::string_view SuffixList::lookup(std::string_view fqdn) const {
  if (fqdn.empty()) return fqdn;
  std::size_t start = 0;
  // Candidates are visited longest first, so the first hit is the prevailing rule.
  while (true) {
    std::string_view cand = fqdn.substr(start);
    std::size_t dot = cand.find('.');
    if (dot == std::string_view::npos) return cand;
    std::string_view parent = cand.substr(dot + 1);
    if (exception_.contains(cand)) return parent;
    if (exact_.contains(cand)) return cand;
    if (wildcard_.contains(parent)) return cand;
    start += dot + 1;
  }
}

std::string suffix_lookup(std::string_view fqdn, const SuffixList& suffixes) {
  return std::string(suffixes.lookup(fqdn));
}

namespace {

constexpr std::size_t kMaxLabel = 63;
constexpr std::size_t kMaxName = 253;

std::optional<DomainName> fail(DomainErrc code, DomainErrc* error) {
  if (error) *error = code;
  return std::nullopt;
}

}  // namespace

std::optional<DomainName> try_parse_domain(std::string_view input, const SuffixList& suffixes,
                                           DomainErrc* error) {
  std::string_view text = trim(input);
  if (!text.empty() && text.back() == '.') text.remove_suffix(1);
  if (text.empty()) return fail(DomainErrc::EmptyInput, error);
  if (text.size() > kMaxName) return fail(DomainErrc::InvalidLabel, error);

  std::string fqdn = to_lower_ascii(text);
  std::size_t label_len = 0;
  for (char c : fqdn) {
    if (c == '.') {
      if (label_len == 0) return fail(DomainErrc::InvalidLabel, error);
      label_len = 0;
      continue;
    }
    if (!is_label_char(c) || ++label_len > kMaxLabel) return fail(DomainErrc::InvalidLabel, error);
  }
  if (label_len == 0) return fail(DomainErrc::InvalidLabel, error);

  std::string_view suffix = suffixes.lookup(fqdn);
  if (suffix.size() >= fqdn.size()) return fail(DomainErrc::NoRegistrableDomain, error);

  DomainName name;
  name.raw = std::string(input);
  name.public_suffix = std::string(suffix);
  std::string_view head = std::string_view(fqdn).substr(0, fqdn.size() - suffix.size() - 1);
  for (auto label : split(head, '.')) name.labels.emplace_back(label);
  name.e2ld = name.labels.back();
  name.fqdn = std::move(fqdn);
  return name;
}

DomainName parse_domain(std::string_view input, const SuffixList& suffixes) {
  DomainErrc code{};
  auto name = try_parse_domain(input, suffixes, &code);
  if (!name) {
    throw DomainError(code, std::string(to_string(code)) + ": '" + std::string(input) + "'");
  }
  return *std::move(name);
}

}  // namespace squatscope
