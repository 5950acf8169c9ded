#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hcg {

// k-uniform hypergraph on vertices 0..n-1.  Edges are stored flat with
// stride k, each edge strictly ascending, no duplicate edges.
struct Hypergraph {
  uint32_t n = 0;
  uint32_t k = 2;
  std::vector<uint32_t> edge_data;                 // flat, stride k
  std::vector<std::vector<uint32_t>> incidence;    // vertex -> edge ids

  size_t edge_count() const { return k == 0 ? 0 : edge_data.size() / k; }

  std::span<const uint32_t> edge(size_t e) const {
    return {edge_data.data() + e * k, k};
  }

  size_t degree(uint32_t v) const { return incidence[v].size(); }
  size_t max_degree() const;
};

// Validates and indexes an edge list.  Throws std::invalid_argument naming
// the offending edge on out-of-range, unsorted or duplicate input.
Hypergraph make_hypergraph(uint32_t n, uint32_t k,
                           const std::vector<std::vector<uint32_t>>& edges);

// H(n, p; k) with p = d / n^(k-1).  Each k-set is included independently
// with probability p, by geometric skipping over the colex-ranked subset
// sequence, so the cost is proportional to the number of edges drawn, not
// to C(n, k).  Identical (n, k, d, seed) give identical hypergraphs.
Hypergraph generate_random(uint32_t n, uint32_t k, double d, uint64_t seed);

// Text format: optional '#' comment lines, then a header "k n m", then m
// lines with k space-separated 0-based ascending vertex ids, LF endings.
std::string serialize(const Hypergraph& h);
Hypergraph parse_hypergraph(const std::string& text);

struct DensityStats {
  uint64_t e3 = 0;  // edges with all three vertices in S
  uint64_t e2 = 0;  // distinct pairs {x,y} in S with some edge {x,y,z}, z outside S
};

// k = 3 only.
DensityStats density_stats(const Hypergraph& h, const std::vector<uint32_t>& s);

// Number of edges through v whose other two vertices meet S in exactly j
// points, j in {1, 2}.  v's own membership in S is ignored.  k = 3 only.
uint64_t partial_degree(const Hypergraph& h, const std::vector<uint32_t>& s,
                        uint32_t v, int j);

// Exact C(a, b); throws std::overflow_error if the value exceeds uint64.
uint64_t binomial(uint64_t a, uint64_t b);

// Inverse of the colex rank sum C(a_1,1)+...+C(a_k,k); ascending result.
std::vector<uint32_t> unrank_colex(uint64_t rank, uint32_t k);

}  // namespace hcg
