#include "hcg/strategy.hpp"

#include <limits>
#include <stdexcept>

#include "hcg/two_phase.hpp"

namespace hcg {

std::pair<uint32_t, uint32_t> AliceGreedy::greedy_move(const GameState& state) {
  const uint32_t n = state.hypergraph().n;
  uint32_t best_v = UINT32_MAX, best_a = UINT32_MAX;
  for (uint32_t v = 0; v < n; ++v) {
    if (state.is_colored(v)) continue;
    uint32_t a = state.availability(v);
    if (a < best_a) { best_a = a; best_v = v; }
  }
  if (best_v == UINT32_MAX) throw std::logic_error("greedy_move on finished game");
  for (uint32_t c = 1; c <= state.q(); ++c)
    if (state.color_available(best_v, c)) return {best_v, c};
  // a(best_v) = 0: the game should already be over, but surface a concrete
  // losing move rather than crash so the forfeit path reports it
  return {best_v, 1};
}

std::pair<uint32_t, uint32_t> AliceGreedy::choose(const GameState& state, Rng&) {
  return greedy_move(state);
}

static std::pair<uint32_t, uint32_t> uniform_legal_move(const GameState& state, Rng& rng) {
  std::vector<uint32_t> uncolored;
  for (uint32_t v = 0; v < state.hypergraph().n; ++v)
    if (!state.is_colored(v) && state.availability(v) > 0) uncolored.push_back(v);
  if (uncolored.empty()) {
    // dead position; emit any uncolored vertex so the forfeit is attributable
    for (uint32_t v = 0; v < state.hypergraph().n; ++v)
      if (!state.is_colored(v)) return {v, 1};
    return {0, 1};
  }
  uint32_t v = uncolored[rng.below(uncolored.size())];
  uint32_t idx = static_cast<uint32_t>(rng.below(state.availability(v)));
  for (uint32_t c = 1; c <= state.q(); ++c) {
    if (!state.color_available(v, c)) continue;
    if (idx == 0) return {v, c};
    --idx;
  }
  return {v, 1};  // unreachable
}

std::pair<uint32_t, uint32_t> BobMirrorRandom::choose(const GameState& state, Rng& rng) {
  if (last_color_ != 0) {
    std::vector<uint32_t> candidates;
    for (uint32_t v = 0; v < state.hypergraph().n; ++v)
      if (!state.is_colored(v) && state.color_available(v, last_color_)) candidates.push_back(v);
    if (!candidates.empty())
      return {candidates[rng.below(candidates.size())], last_color_};
  }
  return uniform_legal_move(state, rng);
}

std::pair<uint32_t, uint32_t> BobUniformRandom::choose(const GameState& state, Rng& rng) {
  return uniform_legal_move(state, rng);
}

std::pair<uint32_t, uint32_t> BobGreedyBlock::choose(const GameState& state, Rng&) {
  GameState scratch(state.hypergraph(), state.q());
  for (const Move& m : state.history()) scratch.apply_move(m.vertex, m.color, m.mover);
  auto moves = scratch.legal_moves();
  if (moves.empty()) return uniform_fallback(state);
  uint32_t best_score = UINT32_MAX;
  std::pair<uint32_t, uint32_t> best = moves.front();
  for (auto [v, c] : moves) {
    scratch.apply_move(v, c, state.turn());
    uint32_t score = scratch.min_availability_uncolored();
    scratch.undo_move();
    if (score < best_score) { best_score = score; best = {v, c}; }
  }
  return best;
}

std::pair<uint32_t, uint32_t> BobGreedyBlock::uniform_fallback(const GameState& state) {
  for (uint32_t v = 0; v < state.hypergraph().n; ++v)
    if (!state.is_colored(v)) return {v, 1};
  return {0, 1};
}

std::unique_ptr<Strategy> make_strategy(const std::string& name, double delta) {
  std::string s = name;
  if (s.rfind("alice:", 0) == 0) s = s.substr(6);
  else if (s.rfind("bob:", 0) == 0) s = s.substr(4);
  if (s == "alice_greedy" || s == "greedy") return std::make_unique<AliceGreedy>();
  if (s == "alice_two_phase" || s == "two_phase" || s == "two-phase")
    return std::make_unique<AliceTwoPhase>(TwoPhaseConfig{delta});
  if (s == "bob_mirror_random" || s == "mirror") return std::make_unique<BobMirrorRandom>();
  if (s == "bob_uniform_random" || s == "uniform" || s == "random")
    return std::make_unique<BobUniformRandom>();
  if (s == "bob_greedy_block" || s == "greedy_block" || s == "block")
    return std::make_unique<BobGreedyBlock>();
  throw std::invalid_argument("unknown strategy: " + name);
}

std::vector<std::string> strategy_names() {
  return {"alice_greedy", "alice_two_phase", "bob_mirror_random", "bob_uniform_random",
          "bob_greedy_block"};
}

}  // namespace hcg
