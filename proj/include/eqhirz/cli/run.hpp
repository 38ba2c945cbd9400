#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqhirz/algebra/format.hpp"
#include "eqhirz/cli/json_io.hpp"

namespace eqhirz::cli {

enum class OutputFormat { Text, Json };

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,      // corpus comparison failed
  kInputError = 2,    // malformed job: location and reason on stderr
  kMathError = 3,     // a mathematical precondition does not hold
  kInternalError = 4,
};

// Command-line overrides of the job's own "basis", "format" and "truncation".
struct RunOptions {
  std::optional<algebra::CoeffBasis> basis;
  std::optional<OutputFormat> format;
  std::optional<int> truncation;
};

struct RunResult {
  int exitCode = kOk;
  std::string output;  // stdout document, empty on error
  std::string error;   // one line, empty on success
};

const std::vector<std::string>& commandNames();

// Runs one job document.  When `command` is nonempty it must agree with the
// job's "command" field (or supplies it when the field is absent).
RunResult runJob(const Json& job, const std::string& command, const RunOptions& options);
// Parses the text first; a JSON syntax error is an input error.
RunResult runJobText(const std::string& text, const std::string& command, const RunOptions& options);

}  // namespace eqhirz::cli
