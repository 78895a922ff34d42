#pragma once

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace squatscope::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2 };

struct RunConfig {
  std::filesystem::path seed_path;
  std::filesystem::path suffix_path;
  std::filesystem::path keyboard_path;
  std::vector<std::filesystem::path> dictionary_paths;  // list name = file stem
  std::filesystem::path unigram_path;

  std::vector<std::filesystem::path> pdns, adns;
  std::filesystem::path mal, pbl, apt, spa, ale;
  std::filesystem::path alexa;
  std::vector<std::string> routing;  // "[YYYY-MM-DD=]path"
  std::filesystem::path certs;

  std::filesystem::path out_dir = ".";
  bool subdomain_matching = false;
  bool typos = false;
  std::size_t shard_count = 1;
  int threads = 0;
  double max_skip_rate = 0.01;
  std::size_t top_k = 20;
};

// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace squatscope::cli
