#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcg/decomposition.hpp"
#include "hcg/forest_marking.hpp"
#include "hcg/game.hpp"
#include "hcg/shadow.hpp"

namespace hcg {

struct TwoPhaseConfig {
  double delta = 0.1;
  // average degree parameter; estimated as 6m/n when absent (k = 3)
  std::optional<double> d_hint;
  std::optional<DecompositionParams> params_override;
};

struct TwoPhaseInstrumentation {
  bool triggered = false;
  uint32_t trigger_uncolored = 0;
  bool decomposition_built = false;
  std::string decomposition_failure;
  uint32_t levels = 0;
  uint32_t deepest_level_size = 0;
  bool cycle_opener_used = false;
  // colored-neighbor count in the light graph at each coloring event of a
  // trigger-set vertex, maximized over the game (both players' events)
  uint32_t max_phi_colored_neighbors = 0;
  // events where no color was simultaneously hypergraph-available and
  // unused on every colored shadow-graph neighbor
  uint32_t fallback_colorings = 0;
  uint32_t phase2_moves = 0;
};

// Greedy until the handoff point: the first moment, at this player's turn,
// when at most 2 gamma n vertices are uncolored and every uncolored vertex
// still has at least beta/2 available colors.  From there the play happens
// on the shadow graph of the uncolored set: a decomposition labels its
// edges, the light ones form a forest (plus at most one cycle), a marking
// strategy on that forest picks the vertex, and the color is the lowest one
// that is available and unused on all colored shadow neighbors.  If the
// decomposition cannot be built the strategy just stays greedy.
class AliceTwoPhase : public Strategy {
 public:
  explicit AliceTwoPhase(TwoPhaseConfig cfg) : cfg_(std::move(cfg)) {}

  std::string name() const override { return "alice_two_phase"; }
  void reset(const GameState& state) override;
  void observe(const GameState& state, const Move& m) override;
  std::pair<uint32_t, uint32_t> choose(const GameState& state, Rng& rng) override;

  const TwoPhaseInstrumentation& instrumentation() const { return instr_; }
  const std::optional<Decomposition>& decomposition() const { return dec_; }

 private:
  bool trigger_holds(const GameState& state);
  void enter_phase2(const GameState& state);
  uint32_t pick_color(const GameState& state, uint32_t v);

  TwoPhaseConfig cfg_;
  TwoPhaseInstrumentation instr_;
  bool phase2_ = false;
  bool degraded_ = false;
  double d_est_ = 0.0;
  std::vector<uint8_t> in_u_;
  std::optional<ShadowGraph> shadow_;
  std::optional<Decomposition> dec_;
  std::optional<ForestMarker> marker_;
  std::vector<std::vector<uint32_t>> phi_adj_;  // by vertex id, full light graph
  std::optional<uint32_t> opener_;
  bool opener_done_ = false;
};

}  // namespace hcg
