#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace chordsl2::cli {

enum class Command { phi, family, table, verify, cf, enumerate, cache };
enum class Format { text, json, csv };

inline constexpr const char *cache_env_var = "CHORDSL2_CACHE";

struct CliConfig {
  Command command = Command::phi;
  Format format = Format::text;
  std::optional<std::filesystem::path> cache_path;
  unsigned threads = 1;
  // Largest diagram order any command may expand, checked up front.
  int max_order = 7;
  int enumeration_bound = 6;
  // Test hook: weights computed with the surgery sign flipped.
  bool inject_sign_flip = false;

  std::string diagram;           // phi
  std::string family = "D";      // family: D, A or B
  int n = 1;                     // family, enumerate
  std::optional<int> k;          // family; all k when absent
  std::string table = "seidel";  // seidel, kreweras, K
  int rows = 4;
  int max_n = 6;                 // verify
  bool include_continued_fraction = false;
  int order = 6;                 // cf
  std::string weights = "conj2"; // conj2, unit, hn
  bool classes = false;          // enumerate
  std::string cache_action;      // stats, export, import
  std::filesystem::path cache_file;
};

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

CliResult run(const CliConfig &config);

// Parses the command line; env_cache is the environment's default cache
// path, or null.
CliResult run_args(const std::vector<std::string> &args, const char *env_cache);

} // namespace chordsl2::cli
