// alfsynth: run learning instances from JSON configs.
//
// Exit codes: 0 converged, 2 budget exhausted, 3 unrealizable, 1 error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "alf/config.hpp"
#include "alf/gen.hpp"
#include "alf/instance.hpp"

namespace fs = std::filesystem;
using namespace alf;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_atomically(const fs::path& path, const std::string& bytes) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(tmp.string() + ": cannot write");
    out << bytes;
    if (!out.flush()) throw std::runtime_error(tmp.string() + ": write failed");
  }
  fs::rename(tmp, path);
}

Json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path.string() + ": invalid JSON: " + e.what());
  }
}

void print_violations(const std::vector<Violation>& vs) {
  for (const auto& v : vs) {
    std::cout << "  [" << v.index << "] " << v.clause << (v.detail.empty() ? "" : ": ") << v.detail
              << "\n";
  }
}

int cmd_run(const std::string& config, const std::string& trace_out, const std::string& format,
            bool checked_flag) {
  const InstanceConfig cfg = load_config(config);
  const bool checked = checked_flag || cfg.checked;
  const RunReport r = run_config(cfg, checked);
  if (!trace_out.empty()) write_atomically(trace_out, dump_trace(r.trace));

  if (format == "json") {
    Json summary{{"config", config},       {"kind", kind_name(cfg.kind)}, {"learner", cfg.learner},
                 {"status", r.status},     {"rounds", r.rounds},          {"hypothesis", r.hypothesis},
                 {"exit_code", r.exit_code()}};
    if (r.audited) summary["violations"] = r.violations.size();
    std::cout << summary.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "config,kind,learner,status,rounds,hypothesis\n"
              << csv_field(config) << "," << kind_name(cfg.kind) << "," << cfg.learner << ","
              << r.status << "," << r.rounds << "," << csv_field(r.hypothesis) << "\n";
  } else {
    std::cout << r.status << " rounds=" << r.rounds;
    if (!r.hypothesis.empty()) std::cout << " hypothesis=" << r.hypothesis;
    std::cout << "\n";
  }
  if (r.audited) {
    std::cerr << "audit: " << r.violations.size() << " violations\n";
    for (const auto& s : r.skipped) std::cerr << "audit skipped: " << s << "\n";
    if (!r.violations.empty()) {
      print_violations(r.violations);
      return kExitError;
    }
  }
  return r.exit_code();
}

int cmd_laws(const std::string& config, std::size_t pairs) {
  const InstanceConfig cfg = load_config(config);
  const LawReport r = check_laws(cfg, pairs);
  std::cout << "laws: " << r.pairs << " pairs over " << r.concepts << " concepts, "
            << r.violations.size() << " violations\n";
  print_violations(r.violations);
  return r.violations.empty() ? kExitConverged : kExitError;
}

int cmd_check_trace(const std::string& config, const std::string& trace) {
  const InstanceConfig cfg = load_config(config);
  const auto vs = check_trace(cfg, read_json(trace));
  std::cout << "check-trace: " << vs.size() << " violations\n";
  print_violations(vs);
  return vs.empty() ? kExitConverged : kExitError;
}

struct SuiteEntry {
  std::string name;
  std::optional<fs::path> path;
  Json doc;
};

struct SuiteRow {
  std::string kind, learner, status, hypothesis, detail;
  std::size_t rounds = 0;
  int exit = kExitError;
};

int cmd_suite(const std::string& dir, const std::string& out_dir, std::size_t random,
              std::uint64_t seed, bool checked) {
  std::vector<SuiteEntry> entries;
  for (const auto& de : fs::directory_iterator(dir)) {
    if (de.is_regular_file() && de.path().extension() == ".json") {
      entries.push_back({de.path().filename().string(), de.path(), {}});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const SuiteEntry& a, const SuiteEntry& b) { return a.name < b.name; });
  gen::Rng rng(seed);
  for (std::size_t i = 0; i < random; ++i) {
    const std::size_t dim = 1 + i % 3;
    char name[64];
    std::snprintf(name, sizeof name, "random-%04zu.json", i);
    entries.push_back({name, std::nullopt, gen::box_config(rng, dim, 200)});
  }
  if (!out_dir.empty()) fs::create_directories(out_dir);

  std::vector<SuiteRow> rows(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < entries.size(); ++i) {
    SuiteRow& row = rows[i];
    try {
      const InstanceConfig cfg = entries[i].path ? load_config(*entries[i].path)
                                                 : parse_config(entries[i].doc);
      row.kind = kind_name(cfg.kind);
      row.learner = cfg.learner;
      const RunReport r = run_config(cfg, checked || cfg.checked);
      row.status = r.status;
      row.rounds = r.rounds;
      row.hypothesis = r.hypothesis;
      row.exit = r.exit_code();
      if (!r.violations.empty()) {
        row.exit = kExitError;
        row.detail = std::to_string(r.violations.size()) + " audit violations";
      }
      if (!out_dir.empty()) {
        const fs::path stem = fs::path(entries[i].name).stem();
        write_atomically(fs::path(out_dir) / (stem.string() + ".trace.json"), dump_trace(r.trace));
      }
    } catch (const std::exception& e) {
      row.status = "error";
      row.exit = kExitError;
      row.detail = e.what();
    }
  }

  int worst = kExitConverged;
  std::cout << "config,kind,learner,status,rounds,exit,hypothesis,detail\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::cout << csv_field(entries[i].name) << "," << r.kind << "," << r.learner << "," << r.status
              << "," << r.rounds << "," << r.exit << "," << csv_field(r.hypothesis) << ","
              << csv_field(r.detail) << "\n";
    if (r.exit == kExitError) worst = kExitError;
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alfsynth: counterexample-guided learning over sample lattices"};
  app.require_subcommand(1);

  std::string config, trace_out, format = "text", dir, out_dir, trace_in;
  bool checked = false;
  std::size_t pairs = 200, random = 0;
  std::uint64_t seed = 0;

  auto* run = app.add_subcommand("run", "run one instance");
  run->add_option("config", config, "instance config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--trace", trace_out, "write the trace document to this file");
  run->add_option("--format", format, "summary format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  run->add_flag("--checked", checked, "audit progress and honesty");

  auto* suite = app.add_subcommand("suite", "run every config in a directory");
  suite->add_option("dir", dir, "directory of configs")->required()->check(CLI::ExistingDirectory);
  suite->add_option("--out", out_dir, "write one trace per instance into this directory");
  suite->add_option("--random", random, "also run this many generated box instances");
  suite->add_option("--seed", seed, "seed for generated instances");
  suite->add_flag("--checked", checked, "audit progress and honesty");

  auto* laws = app.add_subcommand("laws", "check the kappa and lattice laws of an instance");
  laws->add_option("config", config, "instance config (JSON)")->required()->check(CLI::ExistingFile);
  laws->add_option("--pairs", pairs, "number of random sample pairs");

  auto* check = app.add_subcommand("check-trace", "audit and replay a recorded trace");
  check->add_option("config", config, "instance config (JSON)")->required()->check(CLI::ExistingFile);
  check->add_option("trace", trace_in, "trace document")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (*run) return cmd_run(config, trace_out, format, checked);
    if (*suite) return cmd_suite(dir, out_dir, random, seed, checked);
    if (*laws) return cmd_laws(config, pairs);
    if (*check) return cmd_check_trace(config, trace_in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
