#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace landin::cli {

struct RunConfig {
  std::string command;           // compose | vfs | algebra | closure | nf | check
  std::string input_path;       // --in FILE
  std::optional<int> depth;     // --depth K
  std::string format = "json";  // --format json|dot|text
  std::uint64_t seed = 7;       // --seed N
  int instances = 25;           // --instances M
  std::string out_path;         // --out FILE; empty = stdout
  std::string check_target;     // check: SUITE or a theorem id
  std::string word;             // nf: space-separated symbols

  // instance generator bounds (check suites)
  int max_alphabet = 5;    // --max-alphabet
  int max_components = 3;  // --max-components
  int max_depth = 6;       // --max-depth
};

struct RunResult {
  int exit_code = 0;       // 0 ok, 1 check failure, 2 usage/parse error
  std::string output;      // the emitted document
  std::string diagnostics; // error payloads
};

/// Executes one batch command. Never throws; errors land in diagnostics
/// with exit code 2, failed checks in the output with exit code 1.
RunResult run_command(const RunConfig& config);

}  // namespace landin::cli
