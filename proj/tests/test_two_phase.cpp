#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "hcg/decomposition.hpp"
#include "hcg/game.hpp"
#include "hcg/hypergraph.hpp"
#include "hcg/strategy.hpp"
#include "hcg/two_phase.hpp"

using namespace hcg;

namespace {

// closure decomposition with a seed threshold of about one shadow edge;
// termination 3 lets a surviving triangle stand as the last level instead of
// looping on it
DecompositionParams tiny_closure_params() {
  DecompositionParams p;
  p.q = 9;
  p.beta = 3.0;
  p.gamma = 0.1;
  p.zeta = 2;
  p.termination = 3.0;
  p.levels.push_back({LevelParams::Kind::closure, 0.0, 0.1});
  return p;
}

// chain level whose top size always swallows the whole universe
DecompositionParams impossible_chain_params() {
  DecompositionParams p;
  p.q = 18;
  p.beta = 6.0;
  p.gamma = 0.1;
  p.zeta = 2;
  p.termination = 0.0;
  p.levels.push_back({LevelParams::Kind::chain, 100.0, 0.3});
  return p;
}

}  // namespace

TEST_CASE("trigger waits for the uncolored count to fall") {
  // one hyperedge, q = 29, d_hint = e: the threshold 2 gamma n = 28n/29 sits
  // just below n, so the very first position does not trigger but any later
  // one does
  Hypergraph h = make_hypergraph(4, 3, {{1, 2, 3}});
  TwoPhaseConfig cfg;
  cfg.d_hint = std::exp(1.0);
  cfg.params_override = tiny_closure_params();
  AliceTwoPhase alice(cfg);
  Rng rng(1);

  GameState st(h, 29);
  alice.reset(st);
  CHECK_FALSE(alice.instrumentation().triggered);
  auto [v, c] = alice.choose(st, rng);
  CHECK_FALSE(alice.instrumentation().triggered);
  CHECK(std::make_pair(v, c) == AliceGreedy::greedy_move(st));

  st.apply_move(v, c, Player::A);
  alice.observe(st, {v, c, Player::A});
  alice.choose(st, rng);
  CHECK(alice.instrumentation().triggered);
  CHECK(alice.instrumentation().trigger_uncolored == 3);
}

TEST_CASE("trigger requires enough availability everywhere") {
  // 16 disjoint pairs, each completing an edge through vertex 32; coloring a
  // pair monochromatically kills one color at 32.  With q = 18 the floor is
  // beta/2 = 3 available colors.
  std::vector<std::vector<uint32_t>> edges;
  for (uint32_t i = 0; i < 16; ++i) edges.push_back({2 * i, 2 * i + 1, 32});
  Hypergraph h = make_hypergraph(33, 3, edges);
  TwoPhaseConfig cfg;
  cfg.d_hint = std::exp(1.0);  // 2 gamma n = 28/18 * 33, never binding
  cfg.params_override = tiny_closure_params();
  Rng rng(1);

  auto play_pairs = [&](GameState& st, uint32_t pairs) {
    for (uint32_t i = 0; i < pairs; ++i) {
      st.apply_move(2 * i, i + 1, Player::A);
      st.apply_move(2 * i + 1, i + 1, Player::B);
    }
  };

  GameState low(h, 18);
  play_pairs(low, 16);  // vertex 32 down to 2 available colors
  CHECK(low.availability(32) == 2);
  AliceTwoPhase alice(cfg);
  alice.reset(low);
  alice.choose(low, rng);
  CHECK_FALSE(alice.instrumentation().triggered);

  GameState high(h, 18);
  play_pairs(high, 14);  // vertex 32 keeps 4 >= 3 available colors
  CHECK(high.availability(32) == 4);
  AliceTwoPhase alice2(cfg);
  alice2.reset(high);
  alice2.choose(high, rng);
  CHECK(alice2.instrumentation().triggered);
}

TEST_CASE("whole game through the marker on a triangle shadow") {
  // single hyperedge {0,1,2} among 9 vertices: the shadow is one triangle,
  // the closure level keeps exactly it, and phi is the unique cycle, so the
  // opener fires and the marker plays the rest
  std::vector<std::vector<uint32_t>> edges{{0, 1, 2}};
  Hypergraph h = make_hypergraph(9, 3, edges);
  TwoPhaseConfig cfg;
  cfg.d_hint = std::exp(1.0);  // triggers at once for q <= 28
  cfg.params_override = tiny_closure_params();

  for (uint64_t seed = 1; seed <= 25; ++seed) {
    AliceTwoPhase alice(cfg);
    BobUniformRandom bob;
    GameOutcome out = play_game(h, 9, alice, bob, seed, false);
    const TwoPhaseInstrumentation& ins = alice.instrumentation();
    CHECK(out.winner == Player::A);  // max degree 1: no vertex can die
    CHECK_FALSE(out.forfeit);
    CHECK(ins.triggered);
    CHECK(ins.trigger_uncolored == 9);
    CHECK(ins.decomposition_built);
    CHECK(ins.cycle_opener_used);
    CHECK(ins.phase2_moves == 5);
    CHECK(ins.max_phi_colored_neighbors <= 2);  // triangle degree
    CHECK(ins.fallback_colorings == 0);
    REQUIRE(alice.decomposition().has_value());
    CHECK(alice.decomposition()->levels.back() == std::vector<uint32_t>{0, 1, 2});
  }

  // deterministic replay: identical bytes for identical seeds
  AliceTwoPhase a1(cfg), a2(cfg);
  BobUniformRandom b1, b2;
  GameOutcome o1 = play_game(h, 9, a1, b1, 4242, true);
  GameOutcome o2 = play_game(h, 9, a2, b2, 4242, true);
  CHECK(format_trace(o1.trace) == format_trace(o2.trace));
  CHECK(o1.final_colors == o2.final_colors);
  CHECK(a1.instrumentation().max_phi_colored_neighbors ==
        a2.instrumentation().max_phi_colored_neighbors);
}

TEST_CASE("identical to greedy before the handoff point") {
  // d_hint = e^(1/4) and q = 14 put the handoff at 10 uncolored vertices of
  // 20; the first ten rows of the trace must match pure greedy exactly
  Hypergraph h = generate_random(20, 3, 2.0, 77);
  TwoPhaseConfig cfg;
  cfg.d_hint = std::exp(0.25);
  cfg.params_override = tiny_closure_params();

  for (uint64_t seed : {3u, 9u, 27u}) {
    AliceTwoPhase two(cfg);
    AliceGreedy greedy;
    BobUniformRandom bob1, bob2;
    GameOutcome a = play_game(h, 14, two, bob1, seed, true);
    GameOutcome b = play_game(h, 14, greedy, bob2, seed, true);
    CHECK(two.instrumentation().triggered);
    REQUIRE(a.trace.size() >= 10);
    REQUIRE(b.trace.size() >= 10);
    for (size_t i = 0; i < 10; ++i) {
      CHECK(a.trace[i].vertex == b.trace[i].vertex);
      CHECK(a.trace[i].color == b.trace[i].color);
      CHECK(a.trace[i].mover == b.trace[i].mover);
    }
  }
}

TEST_CASE("degraded build stays greedy for the whole game") {
  Hypergraph h = generate_random(20, 3, 2.0, 7);
  TwoPhaseConfig cfg;
  cfg.d_hint = std::exp(1.0);  // triggers immediately at q = 12
  cfg.params_override = impossible_chain_params();

  for (uint64_t seed : {1u, 2u, 3u}) {
    AliceTwoPhase two(cfg);
    AliceGreedy greedy;
    BobUniformRandom bob1, bob2;
    GameOutcome a = play_game(h, 12, two, bob1, seed, true);
    GameOutcome b = play_game(h, 12, greedy, bob2, seed, true);
    const TwoPhaseInstrumentation& ins = two.instrumentation();
    CHECK(ins.triggered);
    CHECK_FALSE(ins.decomposition_built);
    CHECK(ins.decomposition_failure.find("keeps every vertex") != std::string::npos);
    CHECK(ins.phase2_moves == 0);
    CHECK(format_trace(a.trace) == format_trace(b.trace));
    CHECK(a.winner == b.winner);
  }
}

TEST_CASE("non-3-uniform games never leave greedy") {
  Hypergraph h = generate_random(12, 4, 3.0, 1);
  TwoPhaseConfig cfg;
  cfg.d_hint = std::exp(1.0);
  AliceTwoPhase two(cfg);
  AliceGreedy greedy;
  BobUniformRandom bob1, bob2;
  GameOutcome a = play_game(h, 8, two, bob1, 5, true);
  GameOutcome b = play_game(h, 8, greedy, bob2, 5, true);
  CHECK_FALSE(two.instrumentation().triggered);
  CHECK(format_trace(a.trace) == format_trace(b.trace));
}

TEST_CASE("reset clears state between games") {
  Hypergraph h = make_hypergraph(9, 3, {{0, 1, 2}});
  TwoPhaseConfig cfg;
  cfg.d_hint = std::exp(1.0);
  cfg.params_override = tiny_closure_params();
  AliceTwoPhase alice(cfg);
  BobUniformRandom bob;

  GameOutcome first = play_game(h, 9, alice, bob, 90, true);
  uint32_t moves_first = alice.instrumentation().phase2_moves;
  GameOutcome second = play_game(h, 9, alice, bob, 90, true);
  CHECK(alice.instrumentation().phase2_moves == moves_first);
  CHECK(format_trace(first.trace) == format_trace(second.trace));

  // a different opponent stream changes the game but not the guarantees
  GameOutcome third = play_game(h, 9, alice, bob, 91, false);
  CHECK(third.winner == Player::A);
  CHECK(alice.instrumentation().fallback_colorings == 0);
}
