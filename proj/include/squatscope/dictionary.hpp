#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "squatscope/strings.hpp"

namespace squatscope {

// A named word list: lowercase, deduplicated, case-insensitive membership.
class WordList {
 public:
  WordList() = default;
  explicit WordList(std::string name) : name_(std::move(name)) {}

  // One token per line; blank lines and '#' comments ignored.
  static WordList from_file(const std::filesystem::path& path, std::string name = {});
  static WordList from_words(std::string name, std::span<const std::string_view> words);

  void add(std::string_view word);
  bool contains(std::string_view word) const;

  const std::string& name() const { return name_; }
  std::size_t size() const { return words_.size(); }

 private:
  std::string name_;
  StringSet words_;
};

// The general-English, profanity, scrabble and slang lists (or any others).
// A token found in any list is a word; otherwise it is a segment.
class DictionarySet {
 public:
  void add(WordList list) { lists_.push_back(std::move(list)); }
  bool contains_any(std::string_view token) const;
  const WordList* find(std::string_view name) const;
  std::span<const WordList> lists() const { return lists_; }

 private:
  std::vector<WordList> lists_;
};

}  // namespace squatscope
