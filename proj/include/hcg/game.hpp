#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcg/hypergraph.hpp"
#include "hcg/rng.hpp"

namespace hcg {

enum class Player : uint8_t { A, B };

inline Player other(Player p) { return p == Player::A ? Player::B : Player::A; }
inline char player_char(Player p) { return p == Player::A ? 'A' : 'B'; }

enum class GameStatus : uint8_t { in_progress, a_won, b_won };

struct Move {
  uint32_t vertex;
  uint32_t color;  // 1..q
  Player mover;
};

// Proper-coloring game state with incremental availability.  A color c is
// available at an uncolored v iff no edge through v has all of its other
// k-1 vertices colored c.  block_count_[v][c] counts the edges currently
// enforcing that, so apply/undo touch only the edges through the moved
// vertex.  B has won exactly while some uncolored vertex has a(v) = 0.
class GameState {
 public:
  GameState(const Hypergraph& h, uint32_t q);

  const Hypergraph& hypergraph() const { return *h_; }
  uint32_t q() const { return q_; }
  Player turn() const { return turn_; }
  GameStatus status() const;
  std::optional<uint32_t> dead_vertex() const;  // any a(v) = 0 uncolored vertex

  bool is_colored(uint32_t v) const { return color_[v] != 0; }
  uint32_t color_of(uint32_t v) const { return color_[v]; }  // 0 = uncolored
  uint32_t uncolored_count() const { return h_->n - colored_total_; }

  uint32_t availability(uint32_t v) const { return avail_count_[v]; }
  bool color_available(uint32_t v, uint32_t c) const {
    return block_count_[static_cast<size_t>(v) * q_ + c - 1] == 0;
  }
  // smallest a(v) over uncolored vertices; q if everything is colored
  uint32_t min_availability_uncolored() const;

  // pre: game not over
  std::vector<std::pair<uint32_t, uint32_t>> legal_moves() const;
  bool is_legal(uint32_t v, uint32_t c, Player mover, std::string* why = nullptr) const;

  // throws std::invalid_argument and leaves the state unchanged on an
  // illegal move (game over, wrong turn, colored vertex, blocked color)
  void apply_move(uint32_t v, uint32_t c, Player mover);
  void undo_move();

  const std::vector<Move>& history() const { return history_; }
  const std::vector<uint32_t>& colors() const { return color_; }

 private:
  void block(uint32_t v, uint32_t c);
  void unblock(uint32_t v, uint32_t c);

  const Hypergraph* h_;
  uint32_t q_;
  std::vector<uint32_t> color_;
  std::vector<uint8_t> uncolored_in_edge_;
  std::vector<uint8_t> same_count_;    // edge * q + (c-1)
  std::vector<uint16_t> block_count_;  // vertex * q + (c-1)
  std::vector<uint32_t> avail_count_;
  uint32_t colored_total_ = 0;
  uint32_t dead_count_ = 0;
  Player turn_ = Player::A;
  std::vector<Move> history_;
};

// Reference availability computation by direct scan; for consistency tests.
std::vector<uint32_t> recompute_availability(const Hypergraph& h, uint32_t q,
                                             const std::vector<uint32_t>& colors);

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual void reset(const GameState&) {}
  // called after every applied move, both players'
  virtual void observe(const GameState&, const Move&) {}
  virtual std::pair<uint32_t, uint32_t> choose(const GameState& state, Rng& rng) = 0;
};

struct TraceRow {
  uint32_t round;  // 1-based move number
  Player mover;
  uint32_t vertex;
  uint32_t color;
  uint32_t a_min;  // min availability among uncolored after the move
};

struct GameOutcome {
  Player winner;
  uint32_t rounds = 0;  // moves actually played
  std::optional<uint32_t> dead_vertex;
  std::vector<uint32_t> final_colors;
  bool forfeit = false;
  std::string forfeit_reason;
  std::vector<TraceRow> trace;  // filled only when requested
};

// A moves first.  A strategy returning an illegal move forfeits.  The two
// strategies draw from substreams 1 (alice) and 2 (bob) of Rng(seed).
GameOutcome play_game(const Hypergraph& h, uint32_t q, Strategy& alice,
                      Strategy& bob, uint64_t seed, bool want_trace = false);

std::string format_trace(const std::vector<TraceRow>& trace);

}  // namespace hcg
