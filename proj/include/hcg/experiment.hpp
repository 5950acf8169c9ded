#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcg/game.hpp"
#include "hcg/hypergraph.hpp"

namespace hcg {

struct ExperimentConfig {
  uint32_t n = 0;
  uint32_t k = 3;
  double d = 0.0;
  uint32_t q_lo = 0;  // inclusive range; a single q has q_lo == q_hi
  uint32_t q_hi = 0;
  std::string alice = "greedy";
  std::string bob = "mirror";
  uint32_t trials = 1;
  uint64_t seed = 0;
  std::string out_path;  // empty = stdout
  bool trace = false;
  double delta = 0.1;  // forwarded to the two-phase strategy
};

// Per-trial seed: three chained SplitMix64 finalizer applications over
// (master, trial, q).  Fixed; recorded seeds replay across builds.
uint64_t trial_seed(uint64_t master, uint64_t trial, uint64_t q);

struct TrialRecord {
  ExperimentConfig config;
  uint32_t trial = 0;
  uint32_t q = 0;
  uint64_t seed = 0;
  char winner = 'B';
  uint32_t rounds = 0;
  std::optional<uint32_t> dead_vertex;
  bool forfeit = false;
  std::string forfeit_reason;
  // two-phase instrumentation; all zero for other strategies
  bool decomposition_built = false;
  uint32_t max_phi_colored_neighbors = 0;
  uint32_t fallback_colorings = 0;
  std::vector<TraceRow> trace;
};

TrialRecord run_trial(const Hypergraph& h, const ExperimentConfig& cfg, uint32_t q,
                      uint32_t trial);

// One line, LF-terminated, fixed key order; byte-stable for fixed inputs.
std::string trial_record_json(const TrialRecord& r);

struct SweepRow {
  uint32_t q = 0;
  uint32_t trials = 0;
  uint32_t a_wins = 0;
  double win_rate = 0.0;
};

// Trials ordered by index within each q, q ascending.
std::vector<SweepRow> run_sweep(const Hypergraph& h, const ExperimentConfig& cfg);

// Header plus one row per q, LF line ends.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace hcg
