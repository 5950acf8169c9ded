#pragma once

#include <cstdint>
#include <vector>

namespace hcg {

// First-player marking strategy on a forest.  Both players alternately mark
// vertices; the guarantee is that every vertex has at most 3 marked
// neighbors at the moment it is marked, whichever player marks it.
//
// The rule maintains one invariant between this player's moves: every
// connected component of the unmarked forest has at most 2 edges to marked
// vertices.  An opponent mark splits a component and can push at most one
// part to boundary 3; the response marks the vertex of that part that
// separates its three boundary attachments (its median), restoring the
// invariant.  With no boundary-3 component, the response marks a vertex
// whose removal keeps every resulting part at boundary <= 2: any vertex of
// a boundary <= 1 component, or a boundary-attachment vertex of a
// boundary-2 component.  Choices are deterministic (lowest index).
class ForestMarker {
 public:
  // edges must form a forest over vertices 0..n-1; throws on cycles,
  // self-loops, duplicates, or out-of-range endpoints
  ForestMarker(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges);

  uint32_t n() const { return static_cast<uint32_t>(adj_.size()); }
  bool is_marked(uint32_t v) const { return marked_[v]; }
  uint32_t unmarked_count() const { return unmarked_; }
  const std::vector<uint32_t>& neighbors(uint32_t v) const { return adj_[v]; }

  // marked neighbors of v right now; at the moment v itself is marked this
  // is its back-degree
  uint32_t marked_neighbor_count(uint32_t v) const;

  // record a mark made by either player; throws if already marked
  void notify_marked(uint32_t v);

  // this player's move under the component-boundary rule; does not mark.
  // pre: some vertex is unmarked
  uint32_t choose() const;

 private:
  std::vector<std::vector<uint32_t>> adj_;
  std::vector<uint8_t> marked_;
  uint32_t unmarked_ = 0;
};

}  // namespace hcg
