#include "hcg/forest_marking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hcg {

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(uint32_t a, uint32_t b) {
    a = find(a); b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

ForestMarker::ForestMarker(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  adj_.resize(n);
  marked_.assign(n, 0);
  unmarked_ = n;
  UnionFind uf(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw std::invalid_argument("forest edge endpoint out of range");
    if (a == b) throw std::invalid_argument("forest has a self-loop");
    if (!uf.unite(a, b)) throw std::invalid_argument("edge set is not a forest");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

uint32_t ForestMarker::marked_neighbor_count(uint32_t v) const {
  uint32_t c = 0;
  for (uint32_t w : adj_[v]) c += marked_[w];
  return c;
}

void ForestMarker::notify_marked(uint32_t v) {
  if (v >= n() || marked_[v]) throw std::invalid_argument("bad mark");
  marked_[v] = 1;
  --unmarked_;
}

uint32_t ForestMarker::choose() const {
  const uint32_t nv = n();
  if (unmarked_ == 0) throw std::logic_error("choose with everything marked");

  // walk unmarked components in vertex order
  std::vector<uint8_t> seen(nv, 0);
  uint32_t best_candidate = UINT32_MAX;           // boundary <= 2 path
  uint32_t worst_bd = 0, worst_first = UINT32_MAX;  // boundary >= 3 path
  std::vector<uint32_t> worst_comp;

  std::vector<uint32_t> comp, stack;
  for (uint32_t s = 0; s < nv; ++s) {
    if (marked_[s] || seen[s]) continue;
    comp.clear();
    stack.assign(1, s);
    seen[s] = 1;
    uint32_t bd = 0;
    while (!stack.empty()) {
      uint32_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (uint32_t w : adj_[v]) {
        if (marked_[w]) { ++bd; continue; }
        if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
      }
    }
    if (bd >= 3) {
      if (bd > worst_bd || (bd == worst_bd && s < worst_first)) {
        worst_bd = bd;
        worst_first = s;
        worst_comp = comp;
      }
      continue;
    }
    uint32_t cand;
    if (bd <= 1) {
      cand = *std::min_element(comp.begin(), comp.end());
    } else {
      // boundary 2: a lowest attachment vertex separates the two boundary
      // edges (or carries both), so marking it keeps every part at <= 2
      cand = UINT32_MAX;
      for (uint32_t v : comp)
        if (marked_neighbor_count(v) > 0) cand = std::min(cand, v);
    }
    best_candidate = std::min(best_candidate, cand);
  }

  if (worst_comp.empty()) return best_candidate;

  // defuse: mark the vertex of the boundary >= 3 component minimizing the
  // largest per-part attachment count after its removal (the median of the
  // attachment points when boundary is exactly 3, giving parts <= 2)
  std::sort(worst_comp.begin(), worst_comp.end());
  const uint32_t m = static_cast<uint32_t>(worst_comp.size());
  std::vector<uint32_t> local(nv, UINT32_MAX);
  for (uint32_t i = 0; i < m; ++i) local[worst_comp[i]] = i;
  std::vector<uint32_t> order, parent(m, UINT32_MAX), attach(m);
  order.reserve(m);
  std::vector<uint32_t> dfs{0};
  std::vector<uint8_t> vis(m, 0);
  vis[0] = 1;
  while (!dfs.empty()) {
    uint32_t li = dfs.back();
    dfs.pop_back();
    order.push_back(li);
    for (uint32_t w : adj_[worst_comp[li]]) {
      if (marked_[w]) continue;
      uint32_t lw = local[w];
      if (!vis[lw]) { vis[lw] = 1; parent[lw] = li; dfs.push_back(lw); }
    }
  }
  for (uint32_t i = 0; i < m; ++i) attach[i] = marked_neighbor_count(worst_comp[i]);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] != UINT32_MAX) attach[parent[*it]] += attach[*it];
  const uint32_t total = attach[0];
  uint32_t best_v = UINT32_MAX, best_f = UINT32_MAX;
  for (uint32_t li = 0; li < m; ++li) {
    uint32_t v = worst_comp[li];
    uint32_t f = parent[li] == UINT32_MAX ? 0 : total - attach[li];
    for (uint32_t w : adj_[v]) {
      if (marked_[w]) continue;
      uint32_t lw = local[w];
      if (parent[lw] == li) f = std::max(f, attach[lw]);
    }
    if (f < best_f || (f == best_f && v < best_v)) { best_f = f; best_v = v; }
  }
  return best_v;
}

}  // namespace hcg
