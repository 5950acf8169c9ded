#include "hcg/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hcg/rng.hpp"

namespace hcg {

size_t Hypergraph::max_degree() const {
  size_t best = 0;
  for (const auto& inc : incidence) best = std::max(best, inc.size());
  return best;
}

uint64_t binomial(uint64_t a, uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 r = 1;
  for (uint64_t i = 1; i <= b; ++i) {
    r = r * (a - b + i) / i;  // exact at every step for this ordering
    if (r > UINT64_MAX) throw std::overflow_error("binomial overflows uint64");
  }
  return static_cast<uint64_t>(r);
}

std::vector<uint32_t> unrank_colex(uint64_t rank, uint32_t k) {
  std::vector<uint32_t> out(k);
  for (uint32_t j = k; j >= 1; --j) {
    auto fits = [&](uint64_t a) {
      try {
        return binomial(a, j) <= rank;
      } catch (const std::overflow_error&) {
        return false;  // the true value exceeds uint64, hence exceeds rank
      }
    };
    // largest a with C(a, j) <= rank: gallop to a failing bound, then bisect
    uint64_t lo = j - 1;  // C(j-1, j) = 0
    uint64_t step = 1;
    uint64_t bound = lo + step;
    while (fits(bound)) {
      lo = bound;
      step *= 2;
      bound = lo + step;
    }
    uint64_t hi = bound - 1;
    while (lo < hi) {
      uint64_t mid = lo + (hi - lo + 1) / 2;
      if (fits(mid)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    out[j - 1] = static_cast<uint32_t>(lo);
    rank -= binomial(lo, j);
  }
  return out;
}

static void index_edges(Hypergraph& h) {
  h.incidence.assign(h.n, {});
  size_t m = h.edge_count();
  for (size_t e = 0; e < m; ++e) {
    for (uint32_t v : h.edge(e)) h.incidence[v].push_back(static_cast<uint32_t>(e));
  }
}

Hypergraph make_hypergraph(uint32_t n, uint32_t k,
                           const std::vector<std::vector<uint32_t>>& edges) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  Hypergraph h;
  h.n = n;
  h.k = k;
  h.edge_data.reserve(edges.size() * k);
  for (size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.size() != k)
      throw std::invalid_argument("edge " + std::to_string(i) + " has size " +
                                  std::to_string(e.size()) + ", expected " + std::to_string(k));
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] >= n)
        throw std::invalid_argument("edge " + std::to_string(i) + " has vertex " +
                                    std::to_string(e[j]) + " out of range");
      if (j > 0 && e[j] <= e[j - 1])
        throw std::invalid_argument("edge " + std::to_string(i) + " is not strictly ascending");
    }
    h.edge_data.insert(h.edge_data.end(), e.begin(), e.end());
  }
  // duplicate detection over sorted edge views
  size_t m = h.edge_count();
  std::vector<uint32_t> order(m);
  for (size_t i = 0; i < m; ++i) order[i] = static_cast<uint32_t>(i);
  auto cmp = [&](uint32_t a, uint32_t b) {
    auto ea = h.edge(a), eb = h.edge(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
  };
  std::sort(order.begin(), order.end(), cmp);
  for (size_t i = 1; i < m; ++i) {
    auto ea = h.edge(order[i - 1]), eb = h.edge(order[i]);
    if (std::equal(ea.begin(), ea.end(), eb.begin()))
      throw std::invalid_argument("duplicate edge at index " + std::to_string(order[i]));
  }
  index_edges(h);
  return h;
}

Hypergraph generate_random(uint32_t n, uint32_t k, double d, uint64_t seed) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (n < k) throw std::invalid_argument("n must be at least k");
  double nk1 = std::pow(static_cast<double>(n), static_cast<double>(k - 1));
  if (d < 0.0 || d > nk1)
    throw std::invalid_argument("d must lie in [0, n^(k-1)]");
  double p = d / nk1;

  uint64_t total = binomial(n, k);  // throws if the rank space overflows
  Hypergraph h;
  h.n = n;
  h.k = k;

  Rng rng(seed);
  if (p >= 1.0) {
    for (uint64_t r = 0; r < total; ++r) {
      auto e = unrank_colex(r, k);
      h.edge_data.insert(h.edge_data.end(), e.begin(), e.end());
    }
  } else if (p > 0.0) {
    const double log1mp = std::log1p(-p);
    uint64_t r = 0;
    while (r < total) {
      double g = std::floor(std::log(rng.next_open01()) / log1mp);
      if (g >= static_cast<double>(total - r)) break;
      r += static_cast<uint64_t>(g);
      if (r >= total) break;
      auto e = unrank_colex(r, k);
      h.edge_data.insert(h.edge_data.end(), e.begin(), e.end());
      ++r;
    }
  }
  index_edges(h);
  return h;
}

std::string serialize(const Hypergraph& h) {
  std::ostringstream out;
  out << h.k << ' ' << h.n << ' ' << h.edge_count() << '\n';
  size_t m = h.edge_count();
  for (size_t e = 0; e < m; ++e) {
    auto ed = h.edge(e);
    for (size_t j = 0; j < ed.size(); ++j) {
      if (j) out << ' ';
      out << ed[j];
    }
    out << '\n';
  }
  return out.str();
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  auto next_content_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    if (required) throw std::invalid_argument("unexpected end of input at line " + std::to_string(lineno));
    return false;
  };

  if (!next_content_line(true)) {}
  uint64_t k, n, m;
  {
    std::istringstream hs(line);
    if (!(hs >> k >> n >> m))
      throw std::invalid_argument("malformed header at line " + std::to_string(lineno));
    std::string rest;
    if (hs >> rest)
      throw std::invalid_argument("trailing tokens in header at line " + std::to_string(lineno));
  }
  if (k < 2 || n > UINT32_MAX || k > n)
    throw std::invalid_argument("invalid header values at line " + std::to_string(lineno));

  std::vector<std::vector<uint32_t>> edges;
  edges.reserve(m);
  for (uint64_t e = 0; e < m; ++e) {
    next_content_line(true);
    std::istringstream es(line);
    std::vector<uint32_t> edge(k);
    for (uint64_t j = 0; j < k; ++j) {
      int64_t v;
      if (!(es >> v) || v < 0)
        throw std::invalid_argument("malformed edge at line " + std::to_string(lineno));
      edge[j] = static_cast<uint32_t>(v);
    }
    std::string rest;
    if (es >> rest)
      throw std::invalid_argument("trailing tokens at line " + std::to_string(lineno));
    edges.push_back(std::move(edge));
  }
  if (next_content_line(false))
    throw std::invalid_argument("trailing content at line " + std::to_string(lineno));
  try {
    return make_hypergraph(static_cast<uint32_t>(n), static_cast<uint32_t>(k), edges);
  } catch (const std::invalid_argument& ex) {
    throw std::invalid_argument(std::string(ex.what()) + " (in parsed input)");
  }
}

static std::vector<uint8_t> make_mask(uint32_t n, const std::vector<uint32_t>& s) {
  std::vector<uint8_t> mask(n, 0);
  for (uint32_t v : s) {
    if (v >= n) throw std::invalid_argument("set vertex out of range");
    mask[v] = 1;
  }
  return mask;
}

DensityStats density_stats(const Hypergraph& h, const std::vector<uint32_t>& s) {
  if (h.k != 3) throw std::invalid_argument("density_stats requires k = 3");
  auto mask = make_mask(h.n, s);
  DensityStats st;
  std::vector<uint64_t> pairs;
  size_t m = h.edge_count();
  for (size_t e = 0; e < m; ++e) {
    auto ed = h.edge(e);
    int in = mask[ed[0]] + mask[ed[1]] + mask[ed[2]];
    if (in == 3) {
      ++st.e3;
    } else if (in == 2) {
      uint32_t x, y;
      if (!mask[ed[0]]) {
        x = ed[1]; y = ed[2];
      } else if (!mask[ed[1]]) {
        x = ed[0]; y = ed[2];
      } else {
        x = ed[0]; y = ed[1];
      }
      pairs.push_back(static_cast<uint64_t>(x) * h.n + y);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  st.e2 = std::unique(pairs.begin(), pairs.end()) - pairs.begin();
  return st;
}

uint64_t partial_degree(const Hypergraph& h, const std::vector<uint32_t>& s,
                        uint32_t v, int j) {
  if (h.k != 3) throw std::invalid_argument("partial_degree requires k = 3");
  if (j != 1 && j != 2) throw std::invalid_argument("j must be 1 or 2");
  if (v >= h.n) throw std::invalid_argument("vertex out of range");
  auto mask = make_mask(h.n, s);
  uint64_t count = 0;
  for (uint32_t e : h.incidence[v]) {
    auto ed = h.edge(e);
    int in = 0;
    for (uint32_t w : ed)
      if (w != v && mask[w]) ++in;
    if (in == j) ++count;
  }
  return count;
}

}  // namespace hcg
