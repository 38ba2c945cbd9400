#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace eqhirz::cli {

// A corpus directory holds jobs NAME.json next to their expected stdout
// NAME.expected.  A job may set "expect_exit" to a nonzero code, in which
// case NAME.expected holds the error line instead.
struct CorpusRow {
  std::string name;
  std::string title;
  bool pass = false;
  std::string detail;  // diff or reason, empty on success
};

struct CorpusSummary {
  std::vector<CorpusRow> rows;
  int exitCode = 0;  // 0 when every row passes (or there are none), 1 otherwise
  std::string table() const;
};

// Jobs run in file-name order; a missing or unreadable directory is an
// input error.
CorpusSummary runCorpus(const std::filesystem::path& dir);

// Line-by-line comparison: "" when equal, otherwise the differing lines as
// "-expected" / "+actual".
std::string lineDiff(const std::string& expected, const std::string& actual);

}  // namespace eqhirz::cli
