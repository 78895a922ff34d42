#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace squatscope {

class KeyboardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Symmetric key-adjacency map over ASCII. Characters without an entry (for
// example '-') have no neighbours.
class Keyboard {
 public:
  Keyboard() = default;

  // Built-in US QWERTY layout, identical to data/keyboard_qwerty.txt.
  static const Keyboard& qwerty();

  // Lines of `c: neighbours`, '#' comments. Throws KeyboardError on syntax
  // errors or an asymmetric map.
  static Keyboard from_string(std::string_view text);
  static Keyboard from_file(const std::filesystem::path& path);

  // Sorted, duplicate-free neighbour characters of c.
  std::string_view neighbors(char c) const {
    return adj_[static_cast<unsigned char>(c) & 0x7f];
  }

  bool adjacent(char a, char b) const {
    return neighbors(a).find(b) != std::string_view::npos;
  }

  bool is_symmetric() const;

  std::string to_string() const;

 private:
  void add(char a, char b);
  std::array<std::string, 128> adj_{};
};

}  // namespace squatscope
