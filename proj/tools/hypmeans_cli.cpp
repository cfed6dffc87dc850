// hypmeans: run verification suites and write CSV or JSON reports.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 usage or I/O error.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hypmeans/harness.hpp"

namespace fs = std::filesystem;
using namespace hypmeans;

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Options {
  std::string config;
  std::string out_dir;
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  bool quiet = false;
};

int run(const std::string& name, const std::vector<Suite>& suites, const Options& opt) {
  ExperimentConfig cfg;
  try {
    if (!opt.config.empty()) cfg = ExperimentConfig::load(opt.config);
  } catch (const ConfigError& e) {
    std::cerr << "hypmeans: config: " << e.what() << '\n';
    return 2;
  }
  if (opt.seed) cfg.seed = *opt.seed;

  std::vector<SuiteReport> reports;
  try {
    for (Suite s : suites) {
      reports.push_back(run_suite(s, cfg));
      const auto& r = reports.back();
      if (!opt.quiet)
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.suite << "  passed=" << r.passed()
                  << " failed=" << r.failed() << '\n';
    }
  } catch (const ConfigError& e) {
    std::cerr << "hypmeans: config: " << e.what() << '\n';
    return 2;
  }

  const std::string generated = utc_timestamp();
  std::ostringstream body;
  if (opt.format == "json") {
    write_json(body, cfg, reports, generated);
  } else {
    body << "# generated " << generated << "\r\n";
    write_csv(body, cfg, reports);
  }

  if (opt.out_dir.empty()) {
    if (!opt.quiet) {
      for (const auto& r : reports)
        for (const auto& rec : r.records)
          if (!rec.pass)
            std::cout << "  failed: " << rec.experiment << " n=" << rec.n << " k=" << rec.k << " i=" << rec.i
                      << " value=" << format_number(rec.value) << " tol=" << format_number(rec.tolerance) << '\n';
    }
  } else {
    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    const fs::path path = fs::path(opt.out_dir) / (name + "." + opt.format);
    std::ofstream out(path, std::ios::binary);
    if (ec || !out || !(out << body.str()) || !out.flush()) {
      std::cerr << "hypmeans: cannot write " << path.string() << '\n';
      return 2;
    }
    if (!opt.quiet) std::cout << "report: " << path.string() << '\n';
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical means on hyperbolic annuli: verification suites"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--config", opt.config, "Experiment config (INI sections)")->check(CLI::ExistingFile);
  app.add_option("--out", opt.out_dir, "Directory for the report file");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", opt.seed, "Random seed (overrides the config)");
  app.add_flag("--quiet", opt.quiet, "Only set the exit status");

  struct Entry {
    const char* name;
    const char* help;
    std::vector<Suite> suites;
  };
  const std::vector<Entry> entries = {
      {"sufficiency", "Kernel family means vanish on admissible spheres", {Suite::sufficiency}},
      {"necessity", "SVD null space of the mean map over a Laurent dictionary", {Suite::necessity}},
      {"algebra", "Exact ladder, A_m and identity checks; eigen shift", {Suite::algebra}},
      {"darboux", "Darboux equation residuals", {Suite::darboux}},
      {"ode", "Radial ODE residuals of mean profiles", {Suite::ode}},
      {"decay", "Decay slopes and indicial exponents", {Suite::decay}},
      {"support", "Support-radius detector", {Suite::support}},
      {"all", "Every suite", all_suites()},
  };
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    // Accept the global flags after the subcommand too.
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  for (const auto& e : entries)
    if (app.got_subcommand(e.name)) return run(e.name, e.suites, opt);
  return 2;
}
