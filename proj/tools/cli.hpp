#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qtl/skein.hpp"

namespace qtl::cli {

/// Signed nonzero generator indices separated by spaces or commas. Strands
/// default to max|index| + 1. Throws ParseError with the byte offset.
TangleDiagram parse_braid(std::string_view text, int strands = 0);

/// The TangleDiagram::str() form: "strands N: cup@1 x@2 X@1 cap@1", where x is
/// a pos crossing and X a neg one, positions 1-based.
TangleDiagram parse_slices(std::string_view text);

enum class Format { text, jsonl };

struct Job {
  std::string command;
  std::string input;        ///< braid word
  std::string slices_file;  ///< overrides input when set
  int strands = 0;
  int n = -1;
  int m = -1;
  int depth = 4;
  std::vector<int> levels;
  int budget = -1;
  Format format = Format::text;
};

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kInfeasible = 3, kInvariant = 4 };

/// Runs one job; errors are reported on err and mapped to ExitCode.
int run(const Job& job, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs the job.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qtl::cli
