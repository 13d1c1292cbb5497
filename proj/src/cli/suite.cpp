#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "flab/cli/cli.hpp"
#include "flab/cli/json_io.hpp"
#include "flab/errors.hpp"

#ifndef FLAB_FIXTURE_DIR
#define FLAB_FIXTURE_DIR "fixtures/paper"
#endif

namespace flab::cli {

namespace fs = std::filesystem;

namespace {

std::string substitute(std::string arg, const std::string& dir) {
  const std::string key = "{fixtures}";
  for (auto at = arg.find(key); at != std::string::npos; at = arg.find(key, at + dir.size())) {
    arg.replace(at, key.size(), dir);
  }
  return arg;
}

std::vector<Json> parse_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(Json::parse(line));
  }
  return out;
}

VerificationReport run_task(const SuiteTask& task, bool update) {
  const std::string check = "fixture:" + task.id;
  std::vector<std::string> args;
  const std::string dir = fs::path(task.path).parent_path().string();
  for (const auto& a : task.args) args.push_back(substitute(a, dir));
  args.emplace_back("--format");
  args.emplace_back("json");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  std::vector<Json> actual;
  try {
    actual = parse_lines(out.str());
  } catch (const Json::parse_error& e) {
    return violation_report(check, "output is not NDJSON", e.what());
  }
  Json details = {{"args", task.args}, {"reports", actual.size()}, {"exit", code}};
  if (update) {
    Json j = {{"args", task.args}, {"exit", code}, {"expected", actual}};
    std::ofstream(task.path) << j.dump(2) << '\n';
    return pass_report(check, details);
  }
  if (code != task.exit) {
    return violation_report(check, "exit code differs from the golden",
                            {{"expected", task.exit}, {"actual", code}, {"stderr", err.str()}}, details);
  }
  if (actual.size() != task.expected.size()) {
    return violation_report(check, "number of reports differs from the golden",
                            {{"expected", task.expected.size()}, {"actual", actual.size()}}, details);
  }
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (actual[i] != task.expected[i]) {
      return violation_report(check, "report differs from the golden",
                              {{"index", i}, {"expected", task.expected[i]}, {"actual", actual[i]}}, details);
    }
  }
  return pass_report(check, details);
}

}  // namespace

std::string default_fixture_dir() {
  if (const char* env = std::getenv("FLAB_FIXTURE_DIR")) return env;
  return FLAB_FIXTURE_DIR;
}

std::vector<SuiteTask> load_suite(const std::string& dir) {
  if (!fs::is_directory(dir)) throw InputError("fixture directory '" + dir + "' not found");
  std::vector<SuiteTask> tasks;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    const Json j = read_json_file(entry.path().string());
    SuiteTask t;
    t.id = entry.path().stem().string();
    t.path = entry.path().string();
    try {
      t.args = j.at("args").get<std::vector<std::string>>();
      t.exit = j.value("exit", 0);
      if (j.contains("expected")) t.expected = j.at("expected").get<std::vector<Json>>();
    } catch (const Json::exception& e) {
      throw InputError("bad fixture '" + t.path + "': " + e.what());
    }
    tasks.push_back(std::move(t));
  }
  if (tasks.empty()) throw InputError("no fixtures in '" + dir + "'");
  std::sort(tasks.begin(), tasks.end(), [](const SuiteTask& a, const SuiteTask& b) { return a.id < b.id; });
  return tasks;
}

std::vector<VerificationReport> run_suite(const std::vector<SuiteTask>& tasks, std::size_t threads, bool update) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, tasks.size());
  std::vector<VerificationReport> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        results[i] = run_task(tasks[i], update);
      } catch (const std::exception& e) {
        results[i] = violation_report("fixture:" + tasks[i].id, "task failed", e.what());
      }
      results[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace flab::cli
