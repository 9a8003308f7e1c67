#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace systolic::cli {

enum class Command { census, verify, upper_bound, rows, block, svg };
enum class Format { json, text };
enum class Figure { systoles, sphere };

struct IntRange {
  int first = 0;
  int last = 0;
};

struct RunConfig {
  Command command = Command::census;
  IntRange n{6, 6};
  IntRange k{1, 9};
  Format format = Format::json;
  std::optional<std::string> out;
  int brute_max = 12;
  Figure figure = Figure::systoles;
  unsigned threads = 0;  // 0: hardware concurrency
};

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

/// Parse failure or an informational exit (--help): the code plus the text
/// to print.
struct ParseExit {
  int code = kExitUsage;
  std::string message;
};

/// "7" or "5..200".
std::optional<IntRange> parse_range(const std::string& text);

std::variant<RunConfig, ParseExit> parse_args(int argc, const char* const* argv);

/// Executes the command. The report goes to `out` (or the --out file);
/// diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace systolic::cli
