#include "hcg/shadow.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcg {

std::vector<std::pair<uint32_t, uint32_t>> ShadowGraph::edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  out.reserve(witnesses.size());
  for (const auto& [key, w] : witnesses)
    out.emplace_back(static_cast<uint32_t>(key >> 32), static_cast<uint32_t>(key));
  std::sort(out.begin(), out.end());
  return out;
}

ShadowGraph shadow_graph(const Hypergraph& h, const std::vector<uint32_t>& u) {
  if (h.k != 3) throw std::invalid_argument("shadow_graph requires k = 3");
  ShadowGraph g;
  g.universe = u;
  std::sort(g.universe.begin(), g.universe.end());
  g.universe.erase(std::unique(g.universe.begin(), g.universe.end()), g.universe.end());
  g.index_of.assign(h.n, ShadowGraph::npos);
  for (size_t i = 0; i < g.universe.size(); ++i) {
    uint32_t v = g.universe[i];
    if (v >= h.n) throw std::invalid_argument("universe vertex out of range");
    g.index_of[v] = static_cast<uint32_t>(i);
  }
  g.adj.assign(g.universe.size(), {});

  size_t m = h.edge_count();
  for (size_t e = 0; e < m; ++e) {
    auto ed = h.edge(e);
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        uint32_t x = ed[a], y = ed[b];
        if (g.index_of[x] == ShadowGraph::npos || g.index_of[y] == ShadowGraph::npos)
          continue;
        auto& wits = g.witnesses[pack_pair(x, y)];
        if (wits.empty()) {
          g.adj[g.index_of[x]].push_back(y);
          g.adj[g.index_of[y]].push_back(x);
        }
        wits.push_back(static_cast<uint32_t>(e));
      }
    }
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

}  // namespace hcg
