#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flab/report.hpp"

namespace flab::cli {

// Runs one command line (without the program name). Reports go to out as
// NDJSON or an aligned table; usage and parse errors go to err.
// Exit code: 0 all pass or inapplicable, 1 any violation, 2 input or
// capacity error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int exit_code(const std::vector<VerificationReport>& reports);
void print_reports(const std::vector<VerificationReport>& reports, const std::string& format, bool timing,
                   std::ostream& out);

// One fixture file: {"args": [...], "exit": code, "expected": [...]}.
// "{fixtures}" inside an argument is replaced by the fixture directory.
struct SuiteTask {
  std::string id;
  std::string path;
  std::vector<std::string> args;
  int exit = 0;
  std::vector<Json> expected;
};

std::string default_fixture_dir();
// Sorted by id (the file name without extension).
std::vector<SuiteTask> load_suite(const std::string& dir);
// One report per task, in task order whatever the completion order.
std::vector<VerificationReport> run_suite(const std::vector<SuiteTask>& tasks, std::size_t threads,
                                          bool update = false);

}  // namespace flab::cli
