#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hcg/game.hpp"

namespace hcg {

// Colors the uncolored vertex with the fewest available colors (ties by
// lowest vertex index) using the lowest-indexed available color.
class AliceGreedy : public Strategy {
 public:
  std::string name() const override { return "alice_greedy"; }
  std::pair<uint32_t, uint32_t> choose(const GameState& state, Rng& rng) override;

  // shared with the two-phase strategy's first phase
  static std::pair<uint32_t, uint32_t> greedy_move(const GameState& state);
};

// Repeats the color of the opponent's last move on a uniformly random vertex
// where that color is still available.  If no such vertex exists (or this is
// somehow the first move), colors a uniformly random uncolored vertex with a
// uniformly random available color.
class BobMirrorRandom : public Strategy {
 public:
  std::string name() const override { return "bob_mirror_random"; }
  void reset(const GameState&) override { last_color_ = 0; }
  void observe(const GameState&, const Move& m) override {
    if (m.mover == Player::A) last_color_ = m.color;
  }
  std::pair<uint32_t, uint32_t> choose(const GameState& state, Rng& rng) override;

 private:
  uint32_t last_color_ = 0;
};

class BobUniformRandom : public Strategy {
 public:
  std::string name() const override { return "bob_uniform_random"; }
  std::pair<uint32_t, uint32_t> choose(const GameState& state, Rng& rng) override;
};

// One-ply minimizer of the post-move minimum availability among uncolored
// vertices; ties broken by vertex then color index.
class BobGreedyBlock : public Strategy {
 public:
  std::string name() const override { return "bob_greedy_block"; }
  std::pair<uint32_t, uint32_t> choose(const GameState& state, Rng& rng) override;

 private:
  static std::pair<uint32_t, uint32_t> uniform_fallback(const GameState& state);
};

// Accepts canonical names and short aliases (greedy, two_phase, mirror,
// uniform, greedy_block).  Throws std::invalid_argument on unknown names.
// delta is forwarded to alice_two_phase's parameter derivation.
std::unique_ptr<Strategy> make_strategy(const std::string& name, double delta = 0.1);

std::vector<std::string> strategy_names();

}  // namespace hcg
