#include "squatscope/dictionary.hpp"

#include "squatscope/fileio.hpp"

namespace squatscope {

WordList WordList::from_file(const std::filesystem::path& path, std::string name) {
  WordList list(name.empty() ? path.stem().string() : std::move(name));
  for_each_line(read_text_file(path), [&](std::size_t, std::string_view line) {
    line = trim(line);
    if (line.empty() || line.front() == '#') return;
    list.add(line);
  });
  return list;
}

WordList WordList::from_words(std::string name, std::span<const std::string_view> words) {
  WordList list(std::move(name));
  for (auto w : words) list.add(w);
  return list;
}

void WordList::add(std::string_view word) {
  word = trim(word);
  if (!word.empty()) words_.insert(to_lower_ascii(word));
}

bool WordList::contains(std::string_view word) const {
  for (char c : word) {
    if (c >= 'A' && c <= 'Z') return words_.contains(to_lower_ascii(word));
  }
  return words_.contains(word);
}

bool DictionarySet::contains_any(std::string_view token) const {
  for (const auto& l : lists_) {
    if (l.contains(token)) return true;
  }
  return false;
}

const WordList* DictionarySet::find(std::string_view name) const {
  for (const auto& l : lists_) {
    if (l.name() == name) return &l;
  }
  return nullptr;
}

}  // namespace squatscope
