#ifndef ABELPELL_CLI_HPP
#define ABELPELL_CLI_HPP

#include <optional>
#include <string>
#include <vector>

namespace abel::cli {

enum class Format { text, json };

// Exit statuses.
inline constexpr int exit_result = 0;
inline constexpr int exit_empty = 1;
inline constexpr int exit_bad_input = 2;
inline constexpr int exit_resource = 3;
inline constexpr int exit_internal = 4;

struct RunConfig {
  std::string command;               // e.g. "pell solve"
  std::vector<std::string> polys;    // positional polynomial texts
  std::string var = "x";
  int n_max = 20;
  int m = 2;
  std::string inflate_case = "divides_g_plus_1";
  std::string chart = "uAb";
  int power = 2;
  int genus = 0;
  int order = 1;
  int n = 1;
  int k = 1;
  std::vector<int> exponents;
  bool split = false;
  Format format = Format::text;
  std::optional<std::string> out_path;
  std::string help_text;  // filled for the "help" command
};

struct RunResult {
  int exit_code = exit_result;
  std::string output;       // the report; written to out_path instead of stdout when set
  std::string diagnostics;  // error text for stderr
  bool written_to_file = false;
};

// Parses argv-style arguments, without the program name. Help requests yield
// a config with command "help"; syntax errors throw abel::InvalidInput.
RunConfig parse_args(const std::vector<std::string>& args);

RunResult run(const RunConfig& config);

// parse_args then run, with parse failures mapped to exit status 2.
RunResult run_args(const std::vector<std::string>& args);

std::string usage();

}  // namespace abel::cli

#endif  // ABELPELL_CLI_HPP
