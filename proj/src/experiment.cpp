#include "hcg/experiment.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

#include "hcg/strategy.hpp"
#include "hcg/two_phase.hpp"

namespace hcg {

uint64_t trial_seed(uint64_t master, uint64_t trial, uint64_t q) {
  // sequential, not commutative: xor/add of identically hashed slots would
  // make (master, trial) interchangeable and collapse every diagonal pair
  uint64_t s = Rng::mix64(master + Rng::kGamma);
  s = Rng::mix64(s + trial + Rng::kGamma);
  return Rng::mix64(s + q + Rng::kGamma);
}

TrialRecord run_trial(const Hypergraph& h, const ExperimentConfig& cfg, uint32_t q,
                      uint32_t trial) {
  auto alice = make_strategy(cfg.alice, cfg.delta);
  auto bob = make_strategy(cfg.bob, cfg.delta);
  TrialRecord r;
  r.config = cfg;
  r.trial = trial;
  r.q = q;
  r.seed = trial_seed(cfg.seed, trial, q);
  GameOutcome out = play_game(h, q, *alice, *bob, r.seed, cfg.trace);
  r.winner = player_char(out.winner);
  r.rounds = out.rounds;
  r.dead_vertex = out.dead_vertex;
  r.forfeit = out.forfeit;
  r.forfeit_reason = out.forfeit_reason;
  r.trace = std::move(out.trace);
  if (const auto* tp = dynamic_cast<const AliceTwoPhase*>(alice.get())) {
    const auto& ins = tp->instrumentation();
    r.decomposition_built = ins.decomposition_built;
    r.max_phi_colored_neighbors = ins.max_phi_colored_neighbors;
    r.fallback_colorings = ins.fallback_colorings;
  }
  return r;
}

std::string trial_record_json(const TrialRecord& r) {
  nlohmann::ordered_json j;
  j["config"] = {{"n", r.config.n},         {"k", r.config.k},
                 {"d", r.config.d},         {"q", r.q},
                 {"alice", r.config.alice}, {"bob", r.config.bob},
                 {"trials", r.config.trials}, {"seed", r.config.seed},
                 {"trace", r.config.trace}};
  j["trial"] = r.trial;
  j["seed"] = r.seed;
  j["winner"] = std::string(1, r.winner);
  j["rounds"] = r.rounds;
  if (r.dead_vertex) j["dead_vertex"] = *r.dead_vertex;
  if (r.forfeit) {
    j["forfeit"] = true;
    j["forfeit_reason"] = r.forfeit_reason;
  }
  j["decomposition_built"] = r.decomposition_built;
  j["max_phi_colored_neighbors"] = r.max_phi_colored_neighbors;
  j["fallback_colorings"] = r.fallback_colorings;
  if (!r.trace.empty()) j["trace"] = format_trace(r.trace);
  return j.dump() + "\n";
}

std::vector<SweepRow> run_sweep(const Hypergraph& h, const ExperimentConfig& cfg) {
  std::vector<SweepRow> rows;
  ExperimentConfig quiet = cfg;
  quiet.trace = false;
  for (uint32_t q = cfg.q_lo; q <= cfg.q_hi; ++q) {
    SweepRow row;
    row.q = q;
    row.trials = cfg.trials;
    for (uint32_t t = 0; t < cfg.trials; ++t)
      row.a_wins += run_trial(h, quiet, q, t).winner == 'A';
    row.win_rate = static_cast<double>(row.a_wins) / cfg.trials;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "q,trials,a_wins,win_rate\n";
  for (const auto& r : rows) {
    os << r.q << ',' << r.trials << ',' << r.a_wins << ',';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", r.win_rate);
    os << buf << '\n';
  }
  return os.str();
}

}  // namespace hcg
