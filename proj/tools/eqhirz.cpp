#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>

#include "eqhirz/cli/corpus.hpp"
#include "eqhirz/cli/run.hpp"
#include "eqhirz/error.hpp"

namespace ec = eqhirz::cli;

namespace {

int runCommand(const std::string& command, const std::string& jobPath, const ec::RunOptions& options) {
  std::string text;
  if (jobPath == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(jobPath, std::ios::binary);
    if (!in) {
      std::cerr << "input error: cannot read " << jobPath << "\n";
      return ec::kInputError;
    }
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  ec::RunResult r = ec::runJobText(text, command, options);
  std::cout << r.output;
  if (!r.error.empty()) std::cerr << r.error << "\n";
  return r.exitCode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localized equivariant Hirzebruch classes of torus-invariant germs"};
  app.require_subcommand(1);

  std::string basis, format;
  int truncation = 0;
  std::string jobPath = "-";
  std::string corpusDir = "corpus";

  std::map<std::string, CLI::App*> subs;
  for (const auto& name : ec::commandNames()) {
    if (name == "corpus") continue;
    std::string article = std::string("aeiou").find(name[0]) == std::string::npos ? "a " : "an ";
    CLI::App* sub = app.add_subcommand(name, "run " + article + name + " job (JSON file, - for stdin)");
    sub->add_option("job", jobPath, "job document")->capture_default_str();
    sub->add_option("--basis", basis, "coefficient variable of the printed classes")
        ->check(CLI::IsMember({"y", "delta"}));
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--truncation", truncation, "series truncation order")->check(CLI::Range(1, 64));
    subs[name] = sub;
  }
  CLI::App* corpus = app.add_subcommand("corpus", "run every job of a corpus directory against its expected output");
  corpus->add_option("--corpus,dir", corpusDir, "corpus directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : ec::kInputError;
  }

  try {
    if (corpus->parsed()) {
      ec::CorpusSummary s = ec::runCorpus(corpusDir);
      std::cout << s.table();
      return s.exitCode;
    }
    ec::RunOptions options;
    if (!basis.empty()) options.basis = basis == "y" ? eqhirz::algebra::CoeffBasis::Y : eqhirz::algebra::CoeffBasis::Delta;
    if (!format.empty()) options.format = format == "json" ? ec::OutputFormat::Json : ec::OutputFormat::Text;
    if (truncation > 0) options.truncation = truncation;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) return runCommand(name, jobPath, options);
  } catch (const eqhirz::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return ec::kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return ec::kInternalError;
  }
  return ec::kInternalError;
}
