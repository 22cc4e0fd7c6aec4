#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "funcpert/pairs.hpp"

namespace funcpert {

// Configuration of one randomized suite run. Unspecified fields fall back to
// the registered per-suite defaults; tolerances override the documented
// defaults by key (e.g. "identity", "vonneumann", "cap", "opineq_rel",
// "factorized").
struct SuiteConfig {
  std::string suite;
  long trials = 0;
  std::vector<int> dims;
  std::vector<int> degrees;
  std::vector<SchemeKind> schemes;
  std::vector<double> p_values;  // kPInf allowed
  std::vector<double> alpha_values;
  std::vector<double> epsilons;
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;

  double tol(const std::string& key, double fallback) const;
  void validate() const;  // throws std::invalid_argument
};

std::vector<std::string> registered_suites();
// One-line description of the inequality or identity a suite instruments.
std::string suite_instruments(const std::string& suite);
SuiteConfig default_config(const std::string& suite);

// Parses a config document; fields not present fall back to the defaults of
// the named suite (fallback_suite wins over a "suite" key in the document
// when nonempty).
SuiteConfig config_from_json(const std::string& text, const std::string& fallback_suite = "");
std::string config_to_json(const SuiteConfig& cfg);

struct TrialRecord {
  long trial = 0;
  std::uint64_t seed = 0;
  std::string scheme;
  int dim = 0;
  int degree = 0;
  double p = 0;        // NaN when not applicable
  double alpha = 0;    // NaN when not applicable
  double epsilon = 0;  // NaN when not applicable
  std::string detail;
  double lhs = 0;
  double rhs = 0;
  double ratio = 0;
  bool degenerate = false;
};

struct SuiteReport {
  std::string suite;
  std::string instruments;
  SuiteConfig config;
  std::vector<TrialRecord> records;
  long degenerate_count = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  // Full inputs of the extremal trial as a JSON document; replayable.
  std::string argmax_witness;
  bool pass = false;
  double elapsed_seconds = 0.0;
};

SuiteReport run_suite(const SuiteConfig& cfg);

// Recomputes the ratio of a witness document from its stored inputs alone.
double replay_witness(const std::string& witness_json);

std::string report_to_json(const SuiteReport& rep);
std::string trials_to_csv(const SuiteReport& rep);

// Writes report.json and trials.csv into out_dir (created when missing).
void write_report_files(const SuiteReport& rep, const std::filesystem::path& out_dir);

// CLI entry point behind `run`: loads config (or defaults when path empty),
// applies overrides, runs, writes reports. Exit code 0 on pass, 1 on fail,
// 2 on config errors.
int run_from_config(const std::string& suite, const std::string& config_path,
                    std::optional<std::uint64_t> seed_override,
                    std::optional<long> trials_override,
                    const std::filesystem::path& out_dir);

}  // namespace funcpert
