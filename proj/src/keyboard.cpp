#include "squatscope/keyboard.hpp"

#include <algorithm>

#include "squatscope/fileio.hpp"
#include "squatscope/strings.hpp"

namespace squatscope {

namespace {

Keyboard build_qwerty() {
  // Staggered rows: a key touches its row neighbours, the two keys above
  // (same column and one to the right) and the two below (one to the left
  // and same column).
  static constexpr std::array<std::string_view, 4> rows = {"1234567890", "qwertyuiop",
                                                           "asdfghjkl", "zxcvbnm"};
  std::string text;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      text += rows[r][c];
      text += ':';
      auto put = [&](long rr, long cc) {
        if (rr < 0 || rr >= static_cast<long>(rows.size())) return;
        if (cc < 0 || cc >= static_cast<long>(rows[rr].size())) return;
        text += rows[rr][cc];
      };
      long R = static_cast<long>(r), C = static_cast<long>(c);
      put(R, C - 1);
      put(R, C + 1);
      put(R - 1, C);
      put(R - 1, C + 1);
      put(R + 1, C - 1);
      put(R + 1, C);
      text += '\n';
    }
  }
  return Keyboard::from_string(text);
}

}  // namespace

const Keyboard& Keyboard::qwerty() {
  static const Keyboard kb = build_qwerty();
  return kb;
}

void Keyboard::add(char a, char b) {
  auto& s = adj_[static_cast<unsigned char>(a) & 0x7f];
  if (s.find(b) == std::string::npos) {
    s.insert(std::lower_bound(s.begin(), s.end(), b), b);
  }
}

Keyboard Keyboard::from_string(std::string_view text) {
  Keyboard kb;
  std::string error;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (!error.empty()) return;
    line = trim(line);
    if (line.empty() || line.front() == '#') return;
    auto colon = line.find(':');
    std::string_view key = colon == std::string_view::npos ? line : trim(line.substr(0, colon));
    if (colon == std::string_view::npos || key.size() != 1) {
      error = "keyboard line " + std::to_string(lineno) + ": expected `c: neighbours`";
      return;
    }
    for (char n : line.substr(colon + 1)) {
      if (n == ' ' || n == '\t' || n == ',') continue;
      if (static_cast<unsigned char>(n) >= 128) {
        error = "keyboard line " + std::to_string(lineno) + ": non-ASCII neighbour";
        return;
      }
      kb.add(key[0], n);
    }
  });
  if (!error.empty()) throw KeyboardError(error);
  if (!kb.is_symmetric()) throw KeyboardError("keyboard adjacency is not symmetric");
  return kb;
}

Keyboard Keyboard::from_file(const std::filesystem::path& path) {
  return from_string(read_text_file(path));
}

bool Keyboard::is_symmetric() const {
  for (std::size_t a = 0; a < adj_.size(); ++a) {
    for (char b : adj_[a]) {
      if (!adjacent(b, static_cast<char>(a))) return false;
    }
  }
  return true;
}

std::string Keyboard::to_string() const {
  std::string out;
  for (std::size_t a = 0; a < adj_.size(); ++a) {
    if (adj_[a].empty()) continue;
    out += static_cast<char>(a);
    out += ": ";
    out += adj_[a];
    out += '\n';
  }
  return out;
}

}  // namespace squatscope
