#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "hcg/game.hpp"
#include "hcg/hypergraph.hpp"
#include "hcg/rng.hpp"

using namespace hcg;

namespace {

Hypergraph h0() {
  return make_hypergraph(5, 3, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
}

// uniformly random legal playout prefix of the given length
void random_prefix(GameState& st, uint32_t moves, Rng& rng) {
  for (uint32_t i = 0; i < moves && st.status() == GameStatus::in_progress; ++i) {
    auto legal = st.legal_moves();
    if (legal.empty()) break;
    auto [v, c] = legal[rng.below(legal.size())];
    st.apply_move(v, c, st.turn());
  }
}

}  // namespace

TEST_CASE("legal moves after two same-colored vertices") {
  const auto h = h0();
  GameState st(h, 2);
  st.apply_move(0, 1, Player::A);
  st.apply_move(1, 1, Player::B);
  // color 1 is now blocked at both open vertices of the edges {0,1,2} and
  // {0,1,3}, nothing else
  const auto legal = st.legal_moves();
  const std::set<std::pair<uint32_t, uint32_t>> got(legal.begin(), legal.end());
  CHECK(got == std::set<std::pair<uint32_t, uint32_t>>{
                   {2, 2}, {3, 2}, {4, 1}, {4, 2}});
  CHECK(!st.color_available(2, 1));
  CHECK(!st.color_available(3, 1));
  CHECK(st.availability(2) == 1u);
  CHECK(st.availability(3) == 1u);
  CHECK(st.availability(4) == 2u);
  CHECK(st.min_availability_uncolored() == 1u);
  CHECK(st.status() == GameStatus::in_progress);
}

TEST_CASE("dead vertex ends the game for B") {
  const auto h = make_hypergraph(3, 3, {{0, 1, 2}});
  GameState st(h, 1);
  st.apply_move(0, 1, Player::A);
  CHECK(st.status() == GameStatus::in_progress);
  st.apply_move(1, 1, Player::B);
  CHECK(st.status() == GameStatus::b_won);
  REQUIRE(st.dead_vertex().has_value());
  CHECK(*st.dead_vertex() == 2u);
  CHECK(st.availability(2) == 0u);
  // no legal continuation once the game is over
  CHECK_THROWS_AS(st.apply_move(2, 1, Player::A), std::invalid_argument);
}

TEST_CASE("all vertices colored wins for A") {
  const auto h = h0();
  GameState st(h, 3);
  const uint32_t cols[] = {1, 2, 1, 3, 2};
  Player p = Player::A;
  for (uint32_t v = 0; v < 5; ++v) {
    st.apply_move(v, cols[v], p);
    p = other(p);
  }
  CHECK(st.status() == GameStatus::a_won);
  CHECK(st.uncolored_count() == 0u);
  CHECK(st.min_availability_uncolored() == 3u);
}

TEST_CASE("apply_move rejects illegal moves and leaves state intact") {
  const auto h = h0();
  GameState st(h, 2);
  CHECK_THROWS_AS(st.apply_move(0, 1, Player::B), std::invalid_argument);  // wrong turn
  CHECK_THROWS_AS(st.apply_move(9, 1, Player::A), std::invalid_argument);  // range
  CHECK_THROWS_AS(st.apply_move(0, 3, Player::A), std::invalid_argument);  // color range
  CHECK_THROWS_AS(st.apply_move(0, 0, Player::A), std::invalid_argument);
  st.apply_move(0, 1, Player::A);
  CHECK_THROWS_AS(st.apply_move(0, 2, Player::B), std::invalid_argument);  // colored
  st.apply_move(1, 1, Player::B);
  CHECK_THROWS_AS(st.apply_move(2, 1, Player::A), std::invalid_argument);  // blocked
  CHECK(st.history().size() == 2u);
  std::string why;
  CHECK(!st.is_legal(2, 1, Player::A, &why));
  CHECK(!why.empty());
  CHECK(st.is_legal(2, 2, Player::A));
}

TEST_CASE("undo restores the exact initial state") {
  Rng rng(31);
  for (int rep = 0; rep < 40; ++rep) {
    const auto h = generate_random(24, 3, 7.0, 1000 + rep);
    const uint32_t q = 2 + static_cast<uint32_t>(rng.below(4));
    GameState st(h, q);
    const auto avail0 = recompute_availability(h, q, st.colors());
    random_prefix(st, 1 + static_cast<uint32_t>(rng.below(24)), rng);
    const size_t depth = st.history().size();
    for (size_t i = 0; i < depth; ++i) st.undo_move();
    CHECK(st.history().empty());
    CHECK(st.uncolored_count() == 24u);
    CHECK(st.turn() == Player::A);
    CHECK(st.status() == GameStatus::in_progress);
    for (uint32_t v = 0; v < 24; ++v) {
      CHECK(!st.is_colored(v));
      CHECK(st.availability(v) == avail0[v]);
      for (uint32_t c = 1; c <= q; ++c) CHECK(st.color_available(v, c));
    }
  }
}

TEST_CASE("undo after interleaved apply/undo keeps availability consistent") {
  Rng rng(77);
  const auto h = generate_random(30, 3, 9.0, 4242);
  GameState st(h, 3);
  for (int step = 0; step < 400; ++step) {
    const bool can_undo = !st.history().empty();
    const bool do_undo = can_undo && (st.status() != GameStatus::in_progress ||
                                      rng.below(3) == 0);
    if (do_undo) {
      st.undo_move();
    } else {
      auto legal = st.legal_moves();
      if (legal.empty()) break;
      auto [v, c] = legal[rng.below(legal.size())];
      st.apply_move(v, c, st.turn());
    }
    const auto ref = recompute_availability(h, 3, st.colors());
    for (uint32_t v = 0; v < 30; ++v) CHECK(st.availability(v) == ref[v]);
  }
}

TEST_CASE("incremental availability equals recomputation on random prefixes") {
  Rng rng(5);
  for (int rep = 0; rep < 60; ++rep) {
    const uint32_t n = 10 + static_cast<uint32_t>(rng.below(60));
    const auto h = generate_random(n, 3, 2.0 + rng.next_unit() * 10.0, 7000 + rep);
    const uint32_t q = 1 + static_cast<uint32_t>(rng.below(5));
    GameState st(h, q);
    random_prefix(st, n, rng);
    const auto ref = recompute_availability(h, q, st.colors());
    for (uint32_t v = 0; v < n; ++v) {
      CHECK(st.availability(v) == ref[v]);
      if (!st.is_colored(v)) {
        uint32_t a = 0;
        for (uint32_t c = 1; c <= q; ++c) a += st.color_available(v, c);
        CHECK(a == ref[v]);
      }
    }
  }
}

TEST_CASE("no dead vertex is possible with q above the max degree") {
  // each edge through v blocks at most one color, so a(v) >= q - deg(v) > 0
  for (uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto h = generate_random(40, 3, 12.0, seed);
    const uint32_t q = static_cast<uint32_t>(h.max_degree()) + 1;
    GameState st(h, q);
    Rng rng(seed);
    random_prefix(st, 40, rng);
    CHECK(st.status() == GameStatus::a_won);
  }
}

TEST_CASE("play_game reports forfeits for illegal strategies") {
  struct Bad : Strategy {
    std::string name() const override { return "bad"; }
    std::pair<uint32_t, uint32_t> choose(const GameState&, Rng&) override {
      return {999, 1};
    }
  };
  struct First : Strategy {
    std::string name() const override { return "first"; }
    std::pair<uint32_t, uint32_t> choose(const GameState& st, Rng&) override {
      return st.legal_moves().front();
    }
  };
  Bad bad;
  First fine;
  const auto h = h0();
  const auto out = play_game(h, 2, bad, fine, 1);
  CHECK(out.winner == Player::B);
  CHECK(out.forfeit);
  CHECK(out.forfeit_reason.find("bad") != std::string::npos);
  const auto out2 = play_game(h, 2, fine, bad, 1);
  CHECK(out2.winner == Player::A);
  CHECK(out2.forfeit);
}

TEST_CASE("trace rows carry round mover vertex color and min availability") {
  struct First : Strategy {
    std::string name() const override { return "first"; }
    std::pair<uint32_t, uint32_t> choose(const GameState& st, Rng&) override {
      return st.legal_moves().front();
    }
  };
  First a, b;
  const auto h = h0();
  const auto out = play_game(h, 3, a, b, 9, true);
  REQUIRE(!out.trace.empty());
  CHECK(out.trace.size() == out.rounds);
  for (size_t i = 0; i < out.trace.size(); ++i) {
    CHECK(out.trace[i].round == i + 1);
    CHECK(out.trace[i].mover == (i % 2 == 0 ? Player::A : Player::B));
  }
  const auto text = format_trace(out.trace);
  CHECK(text.find("1 A ") == 0u);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<ptrdiff_t>(out.trace.size()));
}

TEST_CASE("q of zero leaves A with no moves") {
  const auto h = h0();
  CHECK_THROWS_AS(GameState(h, 0), std::invalid_argument);
}
