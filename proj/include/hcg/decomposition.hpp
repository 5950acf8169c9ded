#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hcg/shadow.hpp"

namespace hcg {

// One refinement step.  A chain level takes the top floor(2*tau*sigma*n)
// vertices by shadow degree, then grows an A/B chain: B holds top vertices
// with >= 3*beta/L neighbors among the rest, A holds rest vertices with
// >= 2 neighbors in B, iterated zeta times; the next set is top plus
// N(B_zeta) cap A_zeta.  A closure level takes every vertex of shadow
// degree >= 3*Delta and closes under "two neighbors already inside",
// bounded by closure_factor times the seed size.
struct LevelParams {
  enum class Kind : uint8_t { chain, closure };
  Kind kind = Kind::closure;
  double sigma = 0.0;  // chain only: top-size factor
  double theta = 0.0;
};

struct DecompositionParams {
  uint32_t q = 0;
  double beta = 0.0;   // q/3
  double gamma = 0.0;  // 14 log d / q
  double delta = 0.1;
  double L = 100.0;
  uint32_t zeta = 20;  // ceil(2/delta)
  double closure_factor = 39.0;
  double termination = 0.0;  // stop once |U_i| <= this (log n)
  // per level, 1-based step i uses levels[min(i-1, size-1)]
  std::vector<LevelParams> levels;

  double Delta(const LevelParams& lp) const { return 3.0 * lp.theta + beta / L; }
  double tau(const LevelParams& lp) const {
    return lp.kind == LevelParams::Kind::chain ? lp.theta / beta : L * lp.theta / beta;
  }
  const LevelParams& level(uint32_t step) const;  // step >= 1

  // the asymptotic-regime choices: chain levels with
  // theta = e d^{1/3-delta} log^2 d / 14 then theta = L/delta,
  // closure levels with theta = 5/2 afterwards
  static DecompositionParams paper_defaults(uint32_t n, double d, double delta);

  // same recipe anchored to an explicit color count q: one chain level with
  // the d-based theta, then closure levels.  The second chain level's
  // thresholds blow past any moderate n, so closure takes over early here.
  static DecompositionParams derived_for(uint32_t n, double d, uint32_t q, double delta);
};

enum class EdgeLabel : uint8_t {
  heavy,
  light,
  deep_internal,  // inside U_ell, plays with the light edges
  rest            // inside U_i, i < ell
};

struct Decomposition {
  std::vector<std::vector<uint32_t>> levels;  // U_0 .. U_ell, each sorted
  std::vector<uint32_t> level_of;             // by U_0 index: max i with v in U_i
  std::vector<EdgeLabel> labels;              // aligned with ShadowGraph::edges()
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // the labeled shadow edges
  DecompositionParams params;

  uint32_t ell() const { return static_cast<uint32_t>(levels.size()) - 1; }
  uint32_t depth_of(uint32_t vertex, const ShadowGraph& g) const;
  // light + deep_internal edges: the graph the endgame is played on
  std::vector<std::pair<uint32_t, uint32_t>> phi_edges() const;
};

struct BuildResult {
  std::optional<Decomposition> dec;
  std::string failure;  // set when dec is empty
};

// Deterministic; n is the full vertex count (thresholds scale with it).
BuildResult build_decomposition(const ShadowGraph& g, const DecompositionParams& params,
                                uint32_t n);

struct PropertyReport {
  bool pass = true;
  std::string witness;
};

struct VerifyReport {
  PropertyReport p1, p2, p3, p4, p5;
  bool all_pass() const { return p1.pass && p2.pass && p3.pass && p4.pass && p5.pass; }
  std::string summary() const;
};

// Checks, independently of the builder:
//  P1  each vertex of U_i \ U_{i+1} has at most one light neighbor in U_{i+1}
//  P2  every cross edge at interfaces i >= 3 is light
//  P3  each vertex of U_i (i = 1, 2) has at most 3 beta/50 heavy neighbors
//      in U_{i-1} \ U_i
//  P4  each vertex of U_i \ U_{i+1} has at most beta/3 neighbors in U_i
//  P5  the light + deep_internal graph has at most one cycle, inside U_ell
VerifyReport verify_properties(const Decomposition& d, const ShadowGraph& g);

// Vertices of the unique phi cycle in deterministic order, if one exists.
std::optional<std::vector<uint32_t>> phi_cycle(const Decomposition& d);

// Stable text form: levels, then labeled edges; equal inputs give equal bytes.
std::string serialize(const Decomposition& d);

}  // namespace hcg
