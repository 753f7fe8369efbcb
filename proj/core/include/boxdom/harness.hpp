#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxdom/bounds.hpp"
#include "boxdom/graph.hpp"
#include "boxdom/labeling.hpp"

namespace boxdom {

// Key-value sweep configuration (README documents the file format).
struct SweepConfig {
  std::string source;  // "corpus:PATH" or comma-separated graph tokens
  std::string h_list;  // comma-separated graph tokens; may be empty
  int max_product_order = 128;
  int budget_ms = 10000;
  uint64_t seed = 0;
  Policy policy = Policy::deterministic;
  std::string csv_out = "sweep.csv";
  std::string json_out = "sweep.json";
  int parallelism = 0;  // 0: hardware concurrency
};

SweepConfig parse_config_text(const std::string& text,
                              const std::string& origin);
SweepConfig parse_config_file(const std::string& path);

// BOXDOM_BUDGET_MS and BOXDOM_PARALLELISM, when set, replace the
// corresponding config fields.
void apply_env_overrides(SweepConfig& cfg);

// "corpus:PATH" reads a graph6 file; otherwise a comma-separated list of
// graph tokens (K5, P4, C6, S3, g6:...). Whitespace around commas ignored.
std::vector<Graph> expand_source(const std::string& source);

// One graph argument as the CLI accepts it: a graph token, or a raw
// graph6 string.
Graph parse_graph_arg(const std::string& arg);

enum class InstanceStatus { ok, timeout, skipped };
const char* status_name(InstanceStatus s);

// Everything measured for one (G, H) pair. Fields are only populated up to
// the point the pipeline reached; wall_ms never enters reports so reruns
// stay byte-identical.
struct InstanceRecord {
  int g_id = 0, h_id = 0;
  std::string g6_g, g6_h;
  InstanceStatus status = InstanceStatus::ok;

  std::optional<int> gamma_g, gamma_h, pi_closed, pi_open, delta_g;
  std::optional<int> gamma_product;
  std::optional<BoundReport> bound;  // holds flags valid once gamma_product set
  std::optional<bool> claim1, claim2, projection_all;
  std::optional<Eq3Report> eq3;
  std::optional<int> max_label;
  std::optional<int> conflict_count;
  std::string trace;  // labeling trace JSON, kept only on falsification
  long wall_ms = 0;

  bool pipeline_complete() const { return status == InstanceStatus::ok; }
  // A paper-claim check failed: claims, projection, an Eq-3 check, or a
  // dominion conflict (the alteration procedure could not finish as
  // described).
  bool falsification() const;
  // Names of the failed checks, for the summary.
  std::vector<std::string> failed_checks() const;
  // gamma(G box H) - ceil(pi-bound); 0 means the bound is tight.
  std::optional<int> tightness() const;
};

struct RunOptions {
  int budget_ms = 10000;
  int max_product_order = 128;
  Policy policy = Policy::deterministic;
  uint64_t seed = 0;
  bool trace_on_falsification = true;
  bool always_trace = false;  // keep the trace even when every check holds
};

// The full verification pipeline on one pair: power report of G, exact
// gamma of H and of the product, lexicographically least minimum D,
// decomposition over the lex-least power witness, the three labelings,
// claim checks, projections, Eq-3 checks and the bound report.
InstanceRecord run_instance(const Graph& g, const Graph& h,
                            const RunOptions& opt);

extern const char* const kCsvHeader;

// One CSV row per record, RFC-4180 quoting, LF line endings.
std::string to_csv(const std::vector<InstanceRecord>& records);
// Summary JSON (schema 1): config echo, status counts, per-bound outcomes,
// claim failures, max label size, power disagreements, tightness histogram,
// falsifications.
std::string summary_json(const SweepConfig& cfg,
                         const std::vector<InstanceRecord>& records);

struct SweepResult {
  std::vector<InstanceRecord> records;  // submission order: G-major
  std::string csv;
  std::string json;
  int falsifications = 0;
};

// Runs all pairs over a worker pool (instances are independent; report
// content never depends on scheduling).
SweepResult run_sweep(const SweepConfig& cfg);

// Writes csv_out, json_out, and one falsification_<g>_<h>.json trace next
// to the CSV for every falsified instance.
void write_sweep_outputs(const SweepConfig& cfg, const SweepResult& result);

}  // namespace boxdom
