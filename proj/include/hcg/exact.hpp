#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcg/game.hpp"
#include "hcg/hypergraph.hpp"

namespace hcg {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Canonical key of (partial coloring, turn) up to permutation of color names:
// color classes as sorted vertex lists, classes ordered lexicographically,
// then the turn bit.  Encoded as a flat byte string for the memo table.
std::string canonical_key(const GameState& state);

// Representative of a key: colors numbered by class order, plus the turn.
std::pair<std::vector<uint32_t>, Player> decode_canonical_key(const std::string& key, uint32_t n);

struct SolveOptions {
  uint64_t node_budget = 50'000'000;
  bool memoize = true;
  bool reverse_moves = false;  // enumeration-order independence checks
};

// Winner of the coloring game on h with q colors under optimal play, A first.
// Throws BudgetExceeded when the searched node count passes the budget;
// never returns a guess.
Player solve_winner(const Hypergraph& h, uint32_t q, const SolveOptions& opts = {});

struct GameChromaticResult {
  std::optional<uint32_t> value;  // empty: exceeds q_max
  uint32_t q_max;
};

// Least q <= q_max for which A wins; asserts the winner is monotone in q
// along the way (throws std::logic_error on violation, which would falsify
// the monotonicity property this solver relies on).
GameChromaticResult game_chromatic_number(const Hypergraph& h, uint32_t q_max,
                                          const SolveOptions& opts = {});

// Least q admitting a total coloring with no monochromatic edge; backtracking
// with the first vertex pinned to color 1.
uint32_t chromatic_number(const Hypergraph& h, uint32_t q_cap = 16);

}  // namespace hcg
