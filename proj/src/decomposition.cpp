#include "hcg/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hcg {

const LevelParams& DecompositionParams::level(uint32_t step) const {
  if (levels.empty()) throw std::invalid_argument("DecompositionParams has no levels");
  size_t i = std::min<size_t>(step - 1, levels.size() - 1);
  return levels[i];
}

DecompositionParams DecompositionParams::paper_defaults(uint32_t n, double d, double delta) {
  DecompositionParams p;
  double logd = std::log(d);
  p.q = static_cast<uint32_t>(std::lround(std::pow(d, 2.0 / 3.0 + delta)));
  p.beta = p.q / 3.0;
  p.gamma = 14.0 * logd / p.q;
  p.delta = delta;
  p.zeta = static_cast<uint32_t>(std::ceil(2.0 / delta));
  p.termination = std::log(static_cast<double>(n));
  double e = std::exp(1.0);
  p.levels.push_back({LevelParams::Kind::chain, 2.0 * p.gamma,
                      e * std::pow(d, 1.0 / 3.0 - delta) * logd * logd / 14.0});
  p.levels.push_back({LevelParams::Kind::chain,
                      15.0 * e * logd * logd * logd / std::pow(d, 1.0 + 3.0 * delta),
                      p.L / delta});
  p.levels.push_back({LevelParams::Kind::closure, 0.0, 2.5});
  return p;
}

DecompositionParams DecompositionParams::derived_for(uint32_t n, double d, uint32_t q,
                                                     double delta) {
  DecompositionParams p;
  double logd = std::log(d);
  p.q = q;
  p.beta = q / 3.0;
  p.gamma = 14.0 * logd / q;
  p.delta = delta;
  p.zeta = static_cast<uint32_t>(std::ceil(2.0 / delta));
  p.termination = std::log(static_cast<double>(n));
  double e = std::exp(1.0);
  p.levels.push_back({LevelParams::Kind::chain, 2.0 * p.gamma,
                      e * std::pow(d, 1.0 / 3.0 - delta) * logd * logd / 14.0});
  p.levels.push_back({LevelParams::Kind::closure, 0.0, 2.5});
  return p;
}

uint32_t Decomposition::depth_of(uint32_t vertex, const ShadowGraph& g) const {
  uint32_t i = g.index_of[vertex];
  if (i == ShadowGraph::npos) throw std::invalid_argument("vertex not in decomposition universe");
  return level_of[i];
}

std::vector<std::pair<uint32_t, uint32_t>> Decomposition::phi_edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (size_t i = 0; i < edges.size(); ++i)
    if (labels[i] == EdgeLabel::light || labels[i] == EdgeLabel::deep_internal)
      out.push_back(edges[i]);
  return out;
}

namespace {

// adjacency in universe-index space
std::vector<std::vector<uint32_t>> index_adjacency(const ShadowGraph& g) {
  std::vector<std::vector<uint32_t>> adj(g.universe.size());
  for (uint32_t i = 0; i < g.universe.size(); ++i)
    for (uint32_t w : g.adj[i]) adj[i].push_back(g.index_of[w]);
  return adj;
}

struct Builder {
  const ShadowGraph& g;
  const DecompositionParams& params;
  uint32_t n;
  std::vector<std::vector<uint32_t>> adj;  // index space
  std::vector<std::pair<uint32_t, uint32_t>> edge_idx;
  std::vector<EdgeLabel> labels;
  std::vector<std::vector<uint32_t>> levels;
  std::vector<uint32_t> depth;
  std::string failure;

  explicit Builder(const ShadowGraph& g_, const DecompositionParams& p_, uint32_t n_)
      : g(g_), params(p_), n(n_), adj(index_adjacency(g_)) {
    for (auto [x, y] : g.edges()) edge_idx.emplace_back(g.index_of[x], g.index_of[y]);
    labels.assign(edge_idx.size(), EdgeLabel::rest);
  }

  uint32_t degree_in(uint32_t v, const std::vector<uint8_t>& in) const {
    uint32_t c = 0;
    for (uint32_t w : adj[v]) c += in[w];
    return c;
  }

  // chain step: returns the next level or nullopt with failure set.
  // a_drop/b_drop record the last chain set holding each vertex.
  std::optional<std::vector<uint32_t>> chain_step(const std::vector<uint32_t>& cur,
                                                  const LevelParams& lp, uint32_t step,
                                                  std::vector<uint32_t>& a_drop,
                                                  std::vector<uint32_t>& b_drop) {
    const uint32_t m = static_cast<uint32_t>(adj.size());
    std::vector<uint8_t> in_cur(m, 0);
    for (uint32_t v : cur) in_cur[v] = 1;

    double tau = params.tau(lp);
    auto top_target = static_cast<uint64_t>(std::floor(2.0 * tau * lp.sigma * n));
    std::vector<uint32_t> order = cur;
    std::vector<uint32_t> deg(m, 0);
    for (uint32_t v : cur) deg[v] = degree_in(v, in_cur);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
      if (deg[a] != deg[b]) return deg[a] > deg[b];
      return a < b;
    });
    if (top_target >= order.size()) {
      failure = "chain level " + std::to_string(step) + " keeps every vertex (top size " +
                std::to_string(top_target) + " >= " + std::to_string(order.size()) + ")";
      return std::nullopt;
    }
    std::vector<uint32_t> top(order.begin(), order.begin() + static_cast<ptrdiff_t>(top_target));

    // A_0 = cur minus top, B_0 = top vertices with >= 3 beta / L neighbors in A_0
    std::vector<uint8_t> in_a(m, 0), in_b(m, 0);
    for (uint32_t v : cur) in_a[v] = 1;
    for (uint32_t v : top) in_a[v] = 0;
    double b_threshold = 3.0 * params.beta / params.L;
    a_drop.assign(m, UINT32_MAX);
    b_drop.assign(m, UINT32_MAX);
    for (uint32_t v : cur)
      if (in_a[v]) a_drop[v] = 0;
    for (uint32_t v : top)
      if (static_cast<double>(degree_in(v, in_a)) >= b_threshold) {
        in_b[v] = 1;
        b_drop[v] = 0;
      }

    for (uint32_t i = 1; i <= params.zeta; ++i) {
      std::vector<uint32_t> drop_a, drop_b;
      for (uint32_t v : cur)
        if (in_a[v] && degree_in(v, in_b) < 2) drop_a.push_back(v);
      for (uint32_t v : drop_a) in_a[v] = 0;
      for (uint32_t v : cur)
        if (in_a[v]) a_drop[v] = i;
      for (uint32_t v : top)
        if (in_b[v] && static_cast<double>(degree_in(v, in_a)) < b_threshold) drop_b.push_back(v);
      for (uint32_t v : drop_b) in_b[v] = 0;
      for (uint32_t v : top)
        if (in_b[v]) b_drop[v] = i;
    }

    // Y = N(B_zeta) cap A_zeta
    std::vector<uint32_t> next = top;
    for (uint32_t v : cur)
      if (in_a[v] && a_drop[v] == params.zeta && degree_in(v, in_b) >= 1) next.push_back(v);
    std::sort(next.begin(), next.end());
    return next;
  }

  std::optional<std::vector<uint32_t>> closure_step(const std::vector<uint32_t>& cur,
                                                    const LevelParams& lp, uint32_t step) {
    const uint32_t m = static_cast<uint32_t>(adj.size());
    std::vector<uint8_t> in_cur(m, 0);
    for (uint32_t v : cur) in_cur[v] = 1;
    double seed_threshold = 3.0 * params.Delta(lp);
    std::vector<uint8_t> in_s(m, 0);
    std::vector<uint32_t> s;
    for (uint32_t v : cur)
      if (static_cast<double>(degree_in(v, in_cur)) >= seed_threshold) {
        in_s[v] = 1;
        s.push_back(v);
      }
    uint64_t seed_size = s.size();
    auto guard = static_cast<uint64_t>(params.closure_factor * static_cast<double>(seed_size));
    uint64_t added = 0;
    for (;;) {
      uint32_t pick = UINT32_MAX;
      for (uint32_t v : cur) {
        if (in_s[v]) continue;
        uint32_t c = 0;
        for (uint32_t w : adj[v]) c += in_s[w];
        if (c >= 2) { pick = v; break; }
      }
      if (pick == UINT32_MAX) break;
      if (++added > guard) {
        failure = "closure at level " + std::to_string(step) + " exceeded " +
                  std::to_string(guard) + " additions from a seed of " +
                  std::to_string(seed_size);
        return std::nullopt;
      }
      in_s[pick] = 1;
      s.push_back(pick);
    }
    std::sort(s.begin(), s.end());
    return s;
  }

  void label_interface(const std::vector<uint32_t>& next, const LevelParams& lp,
                       const std::vector<uint32_t>& a_drop, const std::vector<uint32_t>& b_drop,
                       uint32_t prev_depth) {
    const uint32_t m = static_cast<uint32_t>(adj.size());
    std::vector<uint8_t> in_next(m, 0);
    for (uint32_t v : next) in_next[v] = 1;
    for (size_t e = 0; e < edge_idx.size(); ++e) {
      auto [x, y] = edge_idx[e];
      if (depth[x] != prev_depth || depth[y] != prev_depth) continue;  // not both in U_{j-1}
      if (in_next[x] == in_next[y]) continue;                          // does not cross yet
      if (lp.kind == LevelParams::Kind::closure) {
        labels[e] = EdgeLabel::light;
        continue;
      }
      uint32_t below = in_next[x] ? y : x;
      uint32_t above = in_next[x] ? x : y;
      // light exactly when the upper endpoint still sat in the B-chain at
      // the step where the lower endpoint fell out of the A-chain
      bool light = a_drop[below] != UINT32_MAX && b_drop[above] != UINT32_MAX &&
                   b_drop[above] >= a_drop[below];
      labels[e] = light ? EdgeLabel::light : EdgeLabel::heavy;
    }
  }

  BuildResult run() {
    const uint32_t m = static_cast<uint32_t>(adj.size());
    std::vector<uint32_t> u0(m);
    std::iota(u0.begin(), u0.end(), 0u);
    levels.push_back(u0);
    depth.assign(m, 0);

    for (uint32_t step = 1;; ++step) {
      const std::vector<uint32_t>& cur = levels.back();
      if (static_cast<double>(cur.size()) <= params.termination) break;
      if (step > 64) {
        failure = "level cap reached without termination";
        return {std::nullopt, failure};
      }
      const LevelParams& lp = params.level(step);
      std::vector<uint32_t> a_drop, b_drop;
      std::optional<std::vector<uint32_t>> next =
          lp.kind == LevelParams::Kind::chain ? chain_step(cur, lp, step, a_drop, b_drop)
                                              : closure_step(cur, lp, step);
      if (!next) return {std::nullopt, failure};
      if (next->size() >= cur.size()) {
        failure = "level " + std::to_string(step) + " did not shrink (" +
                  std::to_string(next->size()) + " of " + std::to_string(cur.size()) + ")";
        return {std::nullopt, failure};
      }
      label_interface(*next, lp, a_drop, b_drop, step - 1);
      for (uint32_t v : *next) depth[v] = step;
      levels.push_back(std::move(*next));
    }

    uint32_t ell = static_cast<uint32_t>(levels.size()) - 1;
    for (size_t e = 0; e < edge_idx.size(); ++e) {
      auto [x, y] = edge_idx[e];
      if (depth[x] == ell && depth[y] == ell) labels[e] = EdgeLabel::deep_internal;
    }

    Decomposition d;
    for (const auto& lev : levels) {
      std::vector<uint32_t> ids;
      ids.reserve(lev.size());
      for (uint32_t i : lev) ids.push_back(g.universe[i]);
      std::sort(ids.begin(), ids.end());
      d.levels.push_back(std::move(ids));
    }
    d.level_of = depth;
    d.labels = labels;
    d.edges = g.edges();
    d.params = params;
    return {std::move(d), ""};
  }
};

}  // namespace

BuildResult build_decomposition(const ShadowGraph& g, const DecompositionParams& params,
                                uint32_t n) {
  Builder b(g, params, n);
  return b.run();
}

namespace {

struct PhiGraph {
  std::vector<uint32_t> verts;  // vertex ids, sorted
  std::vector<std::vector<uint32_t>> adj;  // local indices
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  uint32_t local(uint32_t id) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), id);
    return static_cast<uint32_t>(it - verts.begin());
  }
};

PhiGraph phi_graph(const Decomposition& d) {
  PhiGraph p;
  p.edges = d.phi_edges();
  for (auto [x, y] : p.edges) {
    p.verts.push_back(x);
    p.verts.push_back(y);
  }
  std::sort(p.verts.begin(), p.verts.end());
  p.verts.erase(std::unique(p.verts.begin(), p.verts.end()), p.verts.end());
  p.adj.resize(p.verts.size());
  for (auto [x, y] : p.edges) {
    p.adj[p.local(x)].push_back(p.local(y));
    p.adj[p.local(y)].push_back(p.local(x));
  }
  for (auto& nb : p.adj) std::sort(nb.begin(), nb.end());
  return p;
}

// first cycle found by lowest-vertex DFS, as local indices
std::optional<std::vector<uint32_t>> find_cycle(const PhiGraph& p) {
  const uint32_t m = static_cast<uint32_t>(p.verts.size());
  std::vector<uint32_t> parent(m, UINT32_MAX);
  std::vector<uint8_t> state(m, 0);
  for (uint32_t s = 0; s < m; ++s) {
    if (state[s]) continue;
    std::vector<std::pair<uint32_t, uint32_t>> stack{{s, UINT32_MAX}};
    while (!stack.empty()) {
      auto [v, from] = stack.back();
      stack.pop_back();
      if (state[v]) continue;
      state[v] = 1;
      parent[v] = from;
      for (uint32_t w : p.adj[v]) {
        if (w == from) { from = UINT32_MAX; continue; }  // skip tree edge once
        if (!state[w]) {
          stack.emplace_back(w, v);
        } else {
          // back edge v-w: cycle is w .. v along parent links
          std::vector<uint32_t> cyc{w};
          for (uint32_t x = v; x != w && x != UINT32_MAX; x = parent[x]) cyc.push_back(x);
          std::reverse(cyc.begin() + 1, cyc.end());
          return cyc;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<uint32_t>> phi_cycle(const Decomposition& d) {
  PhiGraph p = phi_graph(d);
  auto cyc = find_cycle(p);
  if (!cyc) return std::nullopt;
  std::vector<uint32_t> ids;
  for (uint32_t li : *cyc) ids.push_back(p.verts[li]);
  return ids;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  const PropertyReport* ps[] = {&p1, &p2, &p3, &p4, &p5};
  for (int i = 0; i < 5; ++i) {
    os << 'P' << (i + 1) << (ps[i]->pass ? " pass" : " FAIL");
    if (!ps[i]->pass) os << " (" << ps[i]->witness << ")";
    if (i < 4) os << "; ";
  }
  return os.str();
}

VerifyReport verify_properties(const Decomposition& d, const ShadowGraph& g) {
  VerifyReport r;
  const uint32_t ell = d.ell();
  const double beta = d.params.beta;
  auto depth_of = [&](uint32_t id) { return d.level_of[g.index_of[id]]; };

  // P1: at most one light up-neighbor per vertex
  {
    std::unordered_map<uint32_t, uint32_t> light_up;
    for (size_t e = 0; e < d.edges.size(); ++e) {
      if (d.labels[e] != EdgeLabel::light) continue;
      auto [x, y] = d.edges[e];
      uint32_t dx = depth_of(x), dy = depth_of(y);
      if (dx == dy) continue;
      uint32_t below = dx < dy ? x : y;
      if (++light_up[below] > 1) {
        r.p1 = {false, "vertex " + std::to_string(below) + " has 2 light up-neighbors"};
        break;
      }
    }
  }

  // P2: interfaces >= 3 are all light
  for (size_t e = 0; e < d.edges.size() && r.p2.pass; ++e) {
    auto [x, y] = d.edges[e];
    uint32_t lo = std::min(depth_of(x), depth_of(y));
    uint32_t hi = std::max(depth_of(x), depth_of(y));
    if (lo != hi && lo + 1 >= 3 && d.labels[e] != EdgeLabel::light)
      r.p2 = {false, "non-light edge " + std::to_string(x) + "-" + std::to_string(y) +
                         " at interface " + std::to_string(lo + 1)};
  }

  // P3: heavy down-degree at levels 1 and 2
  {
    std::unordered_map<uint64_t, uint32_t> heavy_down;  // (vertex, interface)
    for (size_t e = 0; e < d.edges.size() && r.p3.pass; ++e) {
      if (d.labels[e] != EdgeLabel::heavy) continue;
      auto [x, y] = d.edges[e];
      uint32_t dx = depth_of(x), dy = depth_of(y);
      if (dx == dy) continue;
      uint32_t i = std::min(dx, dy) + 1;
      if (i != 1 && i != 2) continue;
      uint32_t upper = dx < dy ? y : x;
      uint64_t key = (static_cast<uint64_t>(upper) << 8) | i;
      if (static_cast<double>(++heavy_down[key]) > 3.0 * beta / 50.0)
        r.p3 = {false, "vertex " + std::to_string(upper) + " exceeds 3beta/50 heavy neighbors at interface " +
                           std::to_string(i)};
    }
  }

  // P4: same-or-deeper degree at most beta/3, for vertices above the last level
  {
    std::unordered_map<uint32_t, uint32_t> same_up;
    for (size_t e = 0; e < d.edges.size() && r.p4.pass; ++e) {
      auto [x, y] = d.edges[e];
      uint32_t dx = depth_of(x), dy = depth_of(y);
      auto bump = [&](uint32_t v) {
        if (depth_of(v) == ell) return;  // P4 ranges over i < ell
        if (static_cast<double>(++same_up[v]) > beta / 3.0)
          r.p4 = {false, "vertex " + std::to_string(v) + " exceeds beta/3 neighbors in its level"};
      };
      if (dx <= dy) bump(x);
      if (dy <= dx) bump(y);
    }
  }

  // P5: phi has at most one independent cycle and it stays inside U_ell
  {
    PhiGraph p = phi_graph(d);
    // cyclomatic number = E - V + components
    std::vector<uint8_t> seen(p.verts.size(), 0);
    uint32_t comps = 0;
    for (uint32_t s = 0; s < p.verts.size(); ++s) {
      if (seen[s]) continue;
      ++comps;
      std::vector<uint32_t> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        for (uint32_t w : p.adj[v])
          if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
      }
    }
    uint64_t extra = p.edges.size() + comps - p.verts.size();
    if (extra > 1) {
      r.p5 = {false, "phi has " + std::to_string(extra) + " independent cycles"};
    } else if (extra == 1) {
      auto cyc = find_cycle(p);
      for (uint32_t li : *cyc)
        if (depth_of(p.verts[li]) != ell) {
          r.p5 = {false, "phi cycle leaves the last level at vertex " +
                             std::to_string(p.verts[li])};
          break;
        }
    }
  }
  return r;
}

std::string serialize(const Decomposition& d) {
  std::ostringstream os;
  os << "levels " << d.levels.size() << '\n';
  for (size_t i = 0; i < d.levels.size(); ++i) {
    os << 'U' << i << ':';
    for (uint32_t v : d.levels[i]) os << ' ' << v;
    os << '\n';
  }
  os << "edges " << d.edges.size() << '\n';
  static const char tag[] = {'h', 'l', 'd', 'r'};
  for (size_t e = 0; e < d.edges.size(); ++e)
    os << d.edges[e].first << ' ' << d.edges[e].second << ' '
       << tag[static_cast<int>(d.labels[e])] << '\n';
  return os.str();
}

}  // namespace hcg
