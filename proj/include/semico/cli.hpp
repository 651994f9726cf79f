#pragma once

/// @file cli.hpp
/// System documents, command dispatch and report rendering behind the
/// `semico` executable.
///
/// A system document is a JSON object with an integer "n", an optional
/// "name", and exactly one representation:
///
///   "paths":       [[1,4],[2,5],...]        minimal path sets (1-based)
///   "cuts":        [[1,2],[4,5],...]        minimal cut sets
///   "table":       "0001"                   2^n characters; character m is
///                                           phi of the subset whose members
///                                           are the set bits of m (bit i-1
///                                           is component i). For n=2:
///                                           m=0 {}, m=1 {1}, m=2 {2}, m=3
///                                           {1,2}, so "0001" is x1x2.
///   "simple_form": [{"subset":[1,4],"coefficient":1}, ...]

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semico/core.hpp"

namespace semico::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kCapacityError = 2,
  kVerificationMismatch = 3,
};

struct PathList {
  std::vector<std::vector<int>> sets;
};
struct CutList {
  std::vector<std::vector<int>> sets;
};
struct TableBits {
  std::string bits;
};
struct SimpleFormTerms {
  std::vector<std::pair<std::vector<int>, Coefficient>> terms;
};

using Representation = std::variant<PathList, CutList, TableBits, SimpleFormTerms>;

struct SystemSpec {
  std::string name;
  int n = 0;
  Representation representation;
};

/// Parses and validates a system document. Throws InputError naming the
/// offending line (for syntax errors) or field.
SystemSpec parse_spec(std::string_view text);

/// Materializes the structure function and checks semicoherence.
TruthTable to_table(const SystemSpec& spec, const Limits& limits = {});

enum class Format { kText, kJson };

struct Options {
  Format format = Format::kText;
  /// One entry (common p) or n entries; decimals or fractions "a/b".
  std::vector<std::string> p;
  bool exact = false;
  Limits limits;
};

inline constexpr const char* kCommands[] = {
    "analyze", "dual",   "paths",       "cuts", "simple-form",
    "signature", "counts", "reliability", "verify"};

struct Report {
  std::string output;
  int exit_code = kSuccess;
};

/// Runs one command. Library errors propagate as exceptions; only a
/// verification mismatch is reported through exit_code.
Report run_command(const SystemSpec& spec, std::string_view command,
                   const Options& options);

/// Parses "0.25", "3", or "1/4" into an exact rational.
Rational parse_rational(std::string_view text);

/// Full command-line entry point: `semico <command> <file|-> [flags]`.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace semico::cli
