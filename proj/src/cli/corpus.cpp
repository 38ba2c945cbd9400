#include "eqhirz/cli/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "eqhirz/cli/run.hpp"
#include "eqhirz/error.hpp"

namespace eqhirz::cli {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> splitLines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::optional<std::string> readFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string lineDiff(const std::string& expected, const std::string& actual) {
  if (expected == actual) return "";
  std::vector<std::string> a = splitLines(expected), b = splitLines(actual);
  std::string out;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    bool ha = i < a.size(), hb = i < b.size();
    if (ha && hb && a[i] == b[i]) continue;
    if (ha) out += "-" + a[i] + "\n";
    if (hb) out += "+" + b[i] + "\n";
  }
  if (out.empty()) out = "(outputs differ in line endings or trailing newline)\n";
  return out;
}

std::string CorpusSummary::table() const {
  std::string out;
  std::size_t width = 4;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  std::size_t passed = 0;
  for (const auto& r : rows) {
    passed += r.pass;
    out += std::string(r.pass ? "PASS  " : "FAIL  ") + r.name + std::string(width - r.name.size() + 2, ' ') + r.title +
           "\n";
    if (!r.pass) {
      std::istringstream in(r.detail);
      for (std::string line; std::getline(in, line);) out += "      " + line + "\n";
    }
  }
  out += std::to_string(passed) + " passed, " + std::to_string(rows.size() - passed) + " failed\n";
  return out;
}

CorpusSummary runCorpus(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw InputError(dir.string() + ": not a directory");
  std::vector<fs::path> jobs;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") jobs.push_back(e.path());
  std::sort(jobs.begin(), jobs.end());

  CorpusSummary s;
  for (const auto& path : jobs) {
    CorpusRow row;
    row.name = path.stem().string();
    std::optional<std::string> text = readFile(path);
    if (!text) {
      row.detail = "cannot read " + path.string();
      s.rows.push_back(row);
      continue;
    }
    int expectExit = kOk;
    try {
      Json doc = Json::parse(*text);
      if (doc.is_object() && doc.contains("title") && doc["title"].is_string()) row.title = doc["title"];
      if (doc.is_object() && doc.contains("expect_exit") && doc["expect_exit"].is_number_integer())
        expectExit = doc["expect_exit"];
    } catch (const Json::parse_error&) {
    }
    RunResult res = runJobText(*text, "", {});
    std::string actual = res.exitCode == kOk ? res.output : res.error + "\n";
    fs::path expectedPath = path;
    expectedPath.replace_extension(".expected");
    std::optional<std::string> expected = readFile(expectedPath);
    if (res.exitCode != expectExit) {
      row.detail = "exit code " + std::to_string(res.exitCode) + ", expected " + std::to_string(expectExit) + "\n" +
                   (res.error.empty() ? "" : res.error + "\n");
    } else if (!expected) {
      row.detail = "missing " + expectedPath.filename().string() + "\n";
    } else {
      row.detail = lineDiff(*expected, actual);
    }
    row.pass = row.detail.empty();
    s.rows.push_back(row);
  }
  s.exitCode = std::all_of(s.rows.begin(), s.rows.end(), [](const CorpusRow& r) { return r.pass; }) ? kOk : kMismatch;
  return s;
}

}  // namespace eqhirz::cli
