#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hcg/hypergraph.hpp"

namespace hcg {

inline uint64_t pack_pair(uint32_t x, uint32_t y) {
  if (x > y) std::swap(x, y);
  return (static_cast<uint64_t>(x) << 32) | y;
}

// 2-shadow of a 3-uniform hypergraph restricted to a vertex set U:
// {x, y} is an edge iff x, y lie in U and some hyperedge {x, y, z} exists.
// The witness z is unrestricted.
struct ShadowGraph {
  std::vector<uint32_t> universe;                       // sorted
  std::vector<uint32_t> index_of;                       // n-sized, npos outside U
  std::vector<std::vector<uint32_t>> adj;               // by U-index, sorted vertex ids
  std::unordered_map<uint64_t, std::vector<uint32_t>> witnesses;  // pair -> edge ids

  static constexpr uint32_t npos = UINT32_MAX;

  bool contains(uint32_t v) const { return v < index_of.size() && index_of[v] != npos; }

  const std::vector<uint32_t>& neighbors(uint32_t v) const {
    return adj[index_of[v]];
  }

  uint32_t degree(uint32_t v) const {
    return static_cast<uint32_t>(adj[index_of[v]].size());
  }

  bool adjacent(uint32_t x, uint32_t y) const {
    return witnesses.count(pack_pair(x, y)) > 0;
  }

  size_t edge_count() const { return witnesses.size(); }

  // edges as sorted (min, max) pairs, ascending; canonical order
  std::vector<std::pair<uint32_t, uint32_t>> edges() const;
};

// k = 3 only.
ShadowGraph shadow_graph(const Hypergraph& h, const std::vector<uint32_t>& u);

}  // namespace hcg
