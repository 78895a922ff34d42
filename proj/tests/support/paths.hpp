#pragma once

#include <filesystem>

namespace testpaths {

inline std::filesystem::path data(const char* rel) {
  return std::filesystem::path(SQUATSCOPE_DATA_DIR) / rel;
}

inline std::filesystem::path fixture(const char* rel) {
  return std::filesystem::path(SQUATSCOPE_FIXTURE_DIR) / rel;
}

}  // namespace testpaths
