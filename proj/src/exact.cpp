#include "hcg/exact.hpp"

#include <algorithm>
#include <unordered_map>

namespace hcg {

std::string canonical_key(const GameState& state) {
  const uint32_t n = state.hypergraph().n;
  if (n >= 255) throw std::invalid_argument("canonical_key supports n < 255");
  std::vector<std::vector<uint8_t>> classes(state.q());
  for (uint32_t v = 0; v < n; ++v) {
    uint32_t c = state.color_of(v);
    if (c != 0) classes[c - 1].push_back(static_cast<uint8_t>(v));
  }
  classes.erase(std::remove_if(classes.begin(), classes.end(),
                               [](const auto& cl) { return cl.empty(); }),
                classes.end());
  std::sort(classes.begin(), classes.end());
  std::string key;
  for (const auto& cl : classes) {
    key.append(reinterpret_cast<const char*>(cl.data()), cl.size());
    key.push_back(static_cast<char>(0xFF));
  }
  key.push_back(state.turn() == Player::A ? 0 : 1);
  return key;
}

std::pair<std::vector<uint32_t>, Player> decode_canonical_key(const std::string& key, uint32_t n) {
  std::vector<uint32_t> colors(n, 0);
  uint32_t color = 1;
  for (size_t i = 0; i + 1 < key.size(); ++i) {
    uint8_t b = static_cast<uint8_t>(key[i]);
    if (b == 0xFF) { ++color; continue; }
    colors.at(b) = color;
  }
  Player turn = key.back() == 0 ? Player::A : Player::B;
  return {colors, turn};
}

namespace {

struct Searcher {
  GameState& st;
  const SolveOptions& opts;
  uint64_t nodes = 0;
  std::unordered_map<std::string, uint8_t> memo;

  Player search() {
    if (++nodes > opts.node_budget)
      throw BudgetExceeded("solver node budget exceeded (" + std::to_string(opts.node_budget) +
                           " nodes)");
    GameStatus status = st.status();
    if (status == GameStatus::a_won) return Player::A;
    if (status == GameStatus::b_won) return Player::B;
    std::string key;
    if (opts.memoize) {
      key = canonical_key(st);
      auto it = memo.find(key);
      if (it != memo.end()) return static_cast<Player>(it->second);
    }
    Player mover = st.turn();
    auto moves = st.legal_moves();
    if (opts.reverse_moves) std::reverse(moves.begin(), moves.end());
    Player result = other(mover);
    for (auto [v, c] : moves) {
      st.apply_move(v, c, mover);
      Player w = search();
      st.undo_move();
      if (w == mover) { result = mover; break; }
    }
    // an uncolored vertex with no available color means B has won already;
    // that is status b_won above, so an empty move list here cannot happen
    if (opts.memoize) memo.emplace(std::move(key), static_cast<uint8_t>(result));
    return result;
  }
};

}  // namespace

Player solve_winner(const Hypergraph& h, uint32_t q, const SolveOptions& opts) {
  GameState st(h, q);
  Searcher s{st, opts};
  return s.search();
}

GameChromaticResult game_chromatic_number(const Hypergraph& h, uint32_t q_max,
                                          const SolveOptions& opts) {
  GameChromaticResult r;
  r.q_max = q_max;
  bool a_seen = false;
  for (uint32_t q = 1; q <= q_max; ++q) {
    Player w = solve_winner(h, q, opts);
    if (w == Player::A) {
      if (!r.value) r.value = q;
      a_seen = true;
    } else if (a_seen) {
      throw std::logic_error("winner not monotone in q at q=" + std::to_string(q));
    }
  }
  return r;
}

namespace {

bool color_feasible(const Hypergraph& h, std::vector<uint32_t>& colors, uint32_t v, uint32_t q,
                    uint64_t& nodes, uint64_t budget) {
  if (v == h.n) return true;
  if (++nodes > budget) throw BudgetExceeded("chromatic backtracking budget exceeded");
  // colors are interchangeable: cap the palette at one past the max in use
  uint32_t used_max = 0;
  for (uint32_t w = 0; w < v; ++w) used_max = std::max(used_max, colors[w]);
  uint32_t cap = std::min(q, used_max + 1);
  for (uint32_t c = 1; c <= cap; ++c) {
    bool ok = true;
    for (uint32_t e : h.incidence[v]) {
      bool mono = true;
      for (uint32_t w : h.edge(e)) {
        if (w == v) continue;
        if (colors[w] != c) { mono = false; break; }
      }
      if (mono) { ok = false; break; }
    }
    if (!ok) continue;
    colors[v] = c;
    if (color_feasible(h, colors, v + 1, q, nodes, budget)) return true;
    colors[v] = 0;
  }
  return false;
}

}  // namespace

uint32_t chromatic_number(const Hypergraph& h, uint32_t q_cap) {
  if (h.edge_count() == 0) return 1;
  std::vector<uint32_t> colors(h.n, 0);
  for (uint32_t q = 1; q <= q_cap; ++q) {
    uint64_t nodes = 0;
    std::fill(colors.begin(), colors.end(), 0);
    if (color_feasible(h, colors, 0, q, nodes, 200'000'000)) return q;
  }
  throw std::runtime_error("chromatic number exceeds cap " + std::to_string(q_cap));
}

}  // namespace hcg
