// Command implementations behind the CLI front end, exposed as plain
// functions so tests can drive them in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitlab::cli {

struct AnalyzeOptions {
  std::string h_csv;                // "3,3,4,5,5"
  std::string lambda_csv;           // "" = standard spectrum (1..n)
  std::vector<std::string> emit;    // artifact file names to write
  std::string out_dir = ".";
};

struct BatchOptions {
  std::string range;  // "4..7" or a single "5"
};

// Exit status mapping shared by both commands: 0 success, 1 malformed input,
// 2 unsupported profile (reducible or complexity != 1). Diagnostics go to
// err as "error [CodeName]: message".
int run_analyze(const AnalyzeOptions& options, std::ostream& out,
                std::ostream& err);
int run_batch(const BatchOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace orbitlab::cli
