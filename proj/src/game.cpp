#include "hcg/game.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hcg {

GameState::GameState(const Hypergraph& h, uint32_t q) : h_(&h), q_(q) {
  if (q == 0) throw std::invalid_argument("q must be positive");
  if (q > 60000) throw std::invalid_argument("q too large");
  color_.assign(h.n, 0);
  uncolored_in_edge_.assign(h.edge_count(), static_cast<uint8_t>(h.k));
  same_count_.assign(static_cast<size_t>(h.edge_count()) * q, 0);
  block_count_.assign(static_cast<size_t>(h.n) * q, 0);
  avail_count_.assign(h.n, q);
}

GameStatus GameState::status() const {
  if (dead_count_ > 0) return GameStatus::b_won;
  if (colored_total_ == h_->n) return GameStatus::a_won;
  return GameStatus::in_progress;
}

std::optional<uint32_t> GameState::dead_vertex() const {
  if (dead_count_ == 0) return std::nullopt;
  for (uint32_t v = 0; v < h_->n; ++v)
    if (color_[v] == 0 && avail_count_[v] == 0) return v;
  return std::nullopt;  // unreachable while the invariants hold
}

uint32_t GameState::min_availability_uncolored() const {
  uint32_t best = q_;
  for (uint32_t v = 0; v < h_->n; ++v)
    if (color_[v] == 0) best = std::min(best, avail_count_[v]);
  return best;
}

std::vector<std::pair<uint32_t, uint32_t>> GameState::legal_moves() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  if (status() != GameStatus::in_progress) return out;
  for (uint32_t v = 0; v < h_->n; ++v) {
    if (color_[v] != 0) continue;
    const uint16_t* row = &block_count_[static_cast<size_t>(v) * q_];
    for (uint32_t c = 1; c <= q_; ++c)
      if (row[c - 1] == 0) out.emplace_back(v, c);
  }
  return out;
}

bool GameState::is_legal(uint32_t v, uint32_t c, Player mover, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (status() != GameStatus::in_progress) return fail("game is over");
  if (mover != turn_) return fail("not this player's turn");
  if (v >= h_->n) return fail("vertex out of range");
  if (c == 0 || c > q_) return fail("color out of range");
  if (color_[v] != 0) return fail("vertex already colored");
  if (block_count_[static_cast<size_t>(v) * q_ + c - 1] != 0)
    return fail("color not available at vertex");
  return true;
}

void GameState::block(uint32_t v, uint32_t c) {
  uint16_t& b = block_count_[static_cast<size_t>(v) * q_ + c - 1];
  if (b++ == 0) {
    if (--avail_count_[v] == 0) ++dead_count_;
  }
}

void GameState::unblock(uint32_t v, uint32_t c) {
  uint16_t& b = block_count_[static_cast<size_t>(v) * q_ + c - 1];
  if (--b == 0) {
    if (avail_count_[v]++ == 0) --dead_count_;
  }
}

void GameState::apply_move(uint32_t v, uint32_t c, Player mover) {
  std::string why;
  if (!is_legal(v, c, mover, &why)) throw std::invalid_argument("illegal move: " + why);
  const uint32_t k = h_->k;
  for (uint32_t e : h_->incidence[v]) {
    auto verts = h_->edge(e);
    uint8_t u = uncolored_in_edge_[e];
    if (u == 1) {
      // v was the unique uncolored vertex; if the others are monochromatic
      // the edge was blocking that color at v and stops doing so now
      uint32_t c0 = 0;
      bool mono = true;
      for (uint32_t w : verts) {
        if (w == v) continue;
        if (c0 == 0) c0 = color_[w];
        else if (color_[w] != c0) { mono = false; break; }
      }
      if (mono && c0 != 0) unblock(v, c0);
      ++same_count_[static_cast<size_t>(e) * q_ + c - 1];
      uncolored_in_edge_[e] = 0;
    } else if (u == 2) {
      uint8_t sc = ++same_count_[static_cast<size_t>(e) * q_ + c - 1];
      uncolored_in_edge_[e] = 1;
      if (sc == k - 1) {
        // edge just became monochromatic except for one uncolored vertex
        for (uint32_t w : verts)
          if (w != v && color_[w] == 0) { block(w, c); break; }
      }
    } else {
      ++same_count_[static_cast<size_t>(e) * q_ + c - 1];
      --uncolored_in_edge_[e];
    }
  }
  color_[v] = c;
  ++colored_total_;
  turn_ = other(turn_);
  history_.push_back(Move{v, c, mover});
}

void GameState::undo_move() {
  if (history_.empty()) throw std::logic_error("no move to undo");
  Move m = history_.back();
  history_.pop_back();
  const uint32_t v = m.vertex, c = m.color, k = h_->k;
  color_[v] = 0;
  --colored_total_;
  turn_ = other(turn_);
  for (uint32_t e : h_->incidence[v]) {
    auto verts = h_->edge(e);
    uint8_t u = uncolored_in_edge_[e];
    if (u == 0) {
      uncolored_in_edge_[e] = 1;
      --same_count_[static_cast<size_t>(e) * q_ + c - 1];
      uint32_t c0 = 0;
      bool mono = true;
      for (uint32_t w : verts) {
        if (w == v) continue;
        if (c0 == 0) c0 = color_[w];
        else if (color_[w] != c0) { mono = false; break; }
      }
      if (mono && c0 != 0) block(v, c0);
    } else if (u == 1) {
      uint8_t sc = same_count_[static_cast<size_t>(e) * q_ + c - 1];
      if (sc == k - 1) {
        for (uint32_t w : verts)
          if (w != v && color_[w] == 0) { unblock(w, c); break; }
      }
      --same_count_[static_cast<size_t>(e) * q_ + c - 1];
      uncolored_in_edge_[e] = 2;
    } else {
      --same_count_[static_cast<size_t>(e) * q_ + c - 1];
      ++uncolored_in_edge_[e];
    }
  }
}

std::vector<uint32_t> recompute_availability(const Hypergraph& h, uint32_t q,
                                             const std::vector<uint32_t>& colors) {
  std::vector<uint32_t> avail(h.n, q);
  for (uint32_t v = 0; v < h.n; ++v) {
    if (colors[v] != 0) continue;  // engine keeps colored vertices at q
    uint32_t a = 0;
    for (uint32_t c = 1; c <= q; ++c) {
      bool ok = true;
      for (uint32_t e : h.incidence[v]) {
        bool all_c = true;
        for (uint32_t w : h.edge(e)) {
          if (w == v) continue;
          if (colors[w] != c) { all_c = false; break; }
        }
        if (all_c) { ok = false; break; }
      }
      if (ok) ++a;
    }
    avail[v] = a;
  }
  return avail;
}

GameOutcome play_game(const Hypergraph& h, uint32_t q, Strategy& alice, Strategy& bob,
                      uint64_t seed, bool want_trace) {
  GameState st(h, q);
  Rng root(seed);
  Rng ra = root.substream(1);
  Rng rb = root.substream(2);
  alice.reset(st);
  bob.reset(st);
  GameOutcome out;
  while (st.status() == GameStatus::in_progress) {
    Player mover = st.turn();
    Strategy& s = mover == Player::A ? alice : bob;
    Rng& rng = mover == Player::A ? ra : rb;
    auto [v, c] = s.choose(st, rng);
    std::string why;
    if (!st.is_legal(v, c, mover, &why)) {
      out.forfeit = true;
      std::ostringstream os;
      os << s.name() << " forfeits with (" << v << "," << c << "): " << why;
      out.forfeit_reason = os.str();
      out.winner = other(mover);
      break;
    }
    st.apply_move(v, c, mover);
    Move m = st.history().back();
    alice.observe(st, m);
    bob.observe(st, m);
    if (want_trace)
      out.trace.push_back(TraceRow{static_cast<uint32_t>(st.history().size()), mover, v, c,
                                   st.min_availability_uncolored()});
  }
  if (!out.forfeit) out.winner = st.status() == GameStatus::a_won ? Player::A : Player::B;
  out.rounds = static_cast<uint32_t>(st.history().size());
  out.dead_vertex = st.dead_vertex();
  out.final_colors = st.colors();
  return out;
}

std::string format_trace(const std::vector<TraceRow>& trace) {
  std::ostringstream os;
  for (const auto& r : trace)
    os << r.round << ' ' << player_char(r.mover) << ' ' << r.vertex << ' ' << r.color << ' '
       << r.a_min << '\n';
  return os.str();
}

}  // namespace hcg
