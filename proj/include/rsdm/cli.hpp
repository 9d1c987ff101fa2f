#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace rsdm::cli {

enum class OutputFormat { Table, Json, Csv };

struct CliConfig {
  int precision_digits = 34;
  int settlement_decimals = 9;
  std::filesystem::path data_dir;
  OutputFormat output_format = OutputFormat::Table;
};

/// Exit status and captured streams of one invocation.
struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line; argv[0] is the program name.
RunResult run(const std::vector<std::string>& argv);

}  // namespace rsdm::cli
