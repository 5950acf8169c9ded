#include "hcg/two_phase.hpp"

#include <algorithm>
#include <cmath>

#include "hcg/strategy.hpp"

namespace hcg {

void AliceTwoPhase::reset(const GameState& state) {
  instr_ = {};
  phase2_ = false;
  degraded_ = false;
  in_u_.clear();
  shadow_.reset();
  dec_.reset();
  marker_.reset();
  phi_adj_.clear();
  opener_.reset();
  opener_done_ = false;
  const Hypergraph& h = state.hypergraph();
  d_est_ = cfg_.d_hint ? *cfg_.d_hint
                       : (h.n > 0 ? 6.0 * static_cast<double>(h.edge_count()) / h.n : 1.0);
  if (d_est_ <= 1.0) d_est_ = 1.0 + 1e-9;  // log d must stay positive
}

bool AliceTwoPhase::trigger_holds(const GameState& state) {
  if (state.hypergraph().k != 3) return false;
  const uint32_t q = state.q();
  double gamma = 14.0 * std::log(d_est_) / q;
  double beta = q / 3.0;
  if (static_cast<double>(state.uncolored_count()) > 2.0 * gamma * state.hypergraph().n)
    return false;
  return static_cast<double>(state.min_availability_uncolored()) >= beta / 2.0;
}

void AliceTwoPhase::enter_phase2(const GameState& state) {
  const Hypergraph& h = state.hypergraph();
  phase2_ = true;
  instr_.triggered = true;
  instr_.trigger_uncolored = state.uncolored_count();

  std::vector<uint32_t> u;
  for (uint32_t v = 0; v < h.n; ++v)
    if (!state.is_colored(v)) u.push_back(v);
  in_u_.assign(h.n, 0);
  for (uint32_t v : u) in_u_[v] = 1;

  shadow_ = shadow_graph(h, u);
  DecompositionParams params =
      cfg_.params_override
          ? *cfg_.params_override
          : DecompositionParams::derived_for(h.n, d_est_, state.q(), cfg_.delta);
  BuildResult built = build_decomposition(*shadow_, params, h.n);
  if (!built.dec) {
    degraded_ = true;
    instr_.decomposition_failure = built.failure;
    return;
  }
  dec_ = std::move(built.dec);
  instr_.decomposition_built = true;
  instr_.levels = dec_->ell();
  instr_.deepest_level_size = static_cast<uint32_t>(dec_->levels.back().size());

  auto phi = dec_->phi_edges();
  phi_adj_.assign(h.n, {});
  for (auto [x, y] : phi) {
    phi_adj_[x].push_back(y);
    phi_adj_[y].push_back(x);
  }

  auto cycle = phi_cycle(*dec_);
  std::vector<std::pair<uint32_t, uint32_t>> marker_edges;
  if (cycle) {
    // open on a minimum-degree cycle vertex; its edges leave the forest
    uint32_t best = UINT32_MAX, best_deg = UINT32_MAX;
    for (uint32_t v : *cycle) {
      auto deg = static_cast<uint32_t>(phi_adj_[v].size());
      if (deg < best_deg || (deg == best_deg && v < best)) { best_deg = deg; best = v; }
    }
    opener_ = best;
    for (auto [x, y] : phi)
      if (x != best && y != best) marker_edges.emplace_back(x, y);
  } else {
    marker_edges = phi;
  }
  marker_.emplace(h.n, marker_edges);
  for (uint32_t v = 0; v < h.n; ++v)
    if (!in_u_[v]) marker_->notify_marked(v);
}

void AliceTwoPhase::observe(const GameState& state, const Move& m) {
  if (!phase2_ || degraded_) return;
  if (!in_u_[m.vertex]) return;
  uint32_t colored_phi = 0;
  for (uint32_t w : phi_adj_[m.vertex]) colored_phi += state.is_colored(w);
  instr_.max_phi_colored_neighbors = std::max(instr_.max_phi_colored_neighbors, colored_phi);
  marker_->notify_marked(m.vertex);
}

uint32_t AliceTwoPhase::pick_color(const GameState& state, uint32_t v) {
  const uint32_t q = state.q();
  std::vector<uint8_t> used(q + 1, 0);
  for (uint32_t w : shadow_->neighbors(v))
    if (state.is_colored(w) && state.color_of(w) <= q) used[state.color_of(w)] = 1;
  for (uint32_t c = 1; c <= q; ++c)
    if (state.color_available(v, c) && !used[c]) return c;
  ++instr_.fallback_colorings;
  for (uint32_t c = 1; c <= q; ++c)
    if (state.color_available(v, c)) return c;
  return 1;  // dead vertex: unreachable while the game is in progress
}

std::pair<uint32_t, uint32_t> AliceTwoPhase::choose(const GameState& state, Rng& rng) {
  if (!phase2_ && trigger_holds(state)) enter_phase2(state);
  if (!phase2_ || degraded_) return AliceGreedy::greedy_move(state);
  ++instr_.phase2_moves;
  uint32_t v;
  if (opener_ && !opener_done_) {
    v = *opener_;
    opener_done_ = true;
    instr_.cycle_opener_used = true;
  } else {
    v = marker_->choose();
  }
  (void)rng;
  return {v, pick_color(state, v)};
}

}  // namespace hcg
