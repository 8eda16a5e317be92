// Command-line front end: expands theorem tags over a range, runs the sweep,
// and emits the report.  Exit code 0 means every record holds or is skipped,
// 1 means at least one fails, 2 means the invocation was invalid.
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcong/report.hpp"
#include "qcong/selfcheck.hpp"
#include "qcong/sweep.hpp"

namespace {

int default_jobs() {
  if (const char* env = std::getenv("QCONG_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return omp_get_max_threads();
}

bool parse_range(const std::string& text, long long& lo, long long& hi) {
  const auto pos = text.find("..");
  if (pos == std::string::npos || pos == 0) return false;
  try {
    std::size_t used = 0;
    lo = std::stoll(text.substr(0, pos), &used);
    if (used != pos) return false;
    const std::string rest = text.substr(pos + 2);
    if (rest.empty()) return false;
    hi = std::stoll(rest, &used);
    if (used != rest.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

std::vector<std::string> split_tags(const std::string& list) {
  std::vector<std::string> tags;
  std::istringstream is(list);
  std::string tag;
  while (std::getline(is, tag, ',')) tags.push_back(tag);
  return tags;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of q-binomial congruence families"};
  app.require_subcommand(1);

  std::string theorem_list, range_text, out_path;
  std::string format_name = "text";
  int jobs = default_jobs();
  bool dump = false;
  std::size_t max_degree = 250000;

  CLI::App* verify = app.add_subcommand("verify", "run verification sweeps");
  verify->add_option("--theorem", theorem_list,
                     "comma-separated theorem tags (see README for the list)")
      ->required();
  verify->add_option("--range", range_text, "parameter range A..B, 1 <= A <= B")
      ->required();
  verify->add_option("--jobs", jobs,
                     "worker threads (default: QCONG_JOBS or all cores)");
  verify->add_option("--format", format_name, "report format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--out", out_path, "write the report to this file");
  verify->add_flag("--dump-remainders", dump,
                   "print nonzero remainders to stderr");
  verify->add_option("--max-degree", max_degree,
                     "per-task dense term cap; 0 disables the guard");

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the built-in diagnostic suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (selftest->parsed()) {
    return qcong::run_selftest(std::cout) ? 0 : 1;
  }

  qcong::SweepConfig cfg;
  cfg.theorems = split_tags(theorem_list);
  if (!parse_range(range_text, cfg.lo, cfg.hi)) {
    std::cerr << "qcong: bad --range, expected A..B\n";
    return 2;
  }
  cfg.jobs = jobs;
  cfg.dump_remainders = dump;
  cfg.max_degree = max_degree;

  qcong::SweepResult res = qcong::run_sweep(cfg);
  if (res.exit_code == 2) {
    std::cerr << "qcong: " << res.error << "\n";
    return 2;
  }

  const std::string report =
      qcong::emit_report(res.records, qcong::parse_format(format_name));
  if (out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "qcong: cannot open " << out_path << " for writing\n";
      return 2;
    }
    out << report;
  }
  if (dump) {
    for (const auto& rec : res.records) {
      if (rec.status != qcong::Status::fails || rec.remainder_text.empty()) {
        continue;
      }
      std::cerr << rec.theorem;
      for (long long p : rec.params) std::cerr << " " << p;
      std::cerr << ": " << rec.remainder_text << "\n";
    }
  }
  return res.exit_code;
}
