#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hcg/hypergraph.hpp"
#include "hcg/rng.hpp"

namespace hcg {

// Derived quantities of the density/colour bound formulas.  All fields are
// plain double evaluations of the closed forms; theta_rounds stays below 1/2
// for every eps in (0, 1/2).
struct BoundParams {
  double d = 0.0;
  uint32_t k = 0;
  double eps = 0.0;
  double delta = 0.0;
  double D = 0.0;            // (d / (k! log d))^{1/(k-1)}
  double alpha = 0.0;        // (1+eps) (k-1)^{1/(k-1)}
  double beta_lb = 0.0;      // (1-2eps) / (2 (k-1)^{1/(k-1)})
  double gamma_lb = 0.0;     // eps / (k-1)^{1/(k-1)}
  double theta_rounds = 0.0; // alpha (2 beta_lb + gamma_lb) / 2
  double chi_est = 0.0;      // (d / (k (k-2)! log d))^{1/(k-1)}
  double ub = 0.0;           // d^{2/3 + delta}
};

// Requires d > 1, k >= 3, 0 < eps < 1/2, delta > 0.
BoundParams eval_bounds(double d, uint32_t k, double eps, double delta);

// The inequality 2 (2 beta + gamma)^k - (2 beta)^k > 2 (beta + gamma) / (k-1),
// evaluated exactly as written.
struct FormulaReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

FormulaReport formula_holds(double beta, double gamma, uint32_t k);

// Class sizes of a colouring; n is their sum.
struct Composition {
  std::vector<uint64_t> c;

  uint64_t n() const;
  uint32_t q() const { return static_cast<uint32_t>(c.size()); }
};

// f = sum_i (1-p)^{c_i^2 / 2} against its convexity lower bound
//   q (1-p)^{n^2 / (2 q^2)}   when q x0 <= n
//   q (1-p)^{x0^2 / 2}        otherwise
// with x0 = sqrt(2 / (-log(1-p))).
struct FBoundReport {
  double f = 0.0;
  double bound = 0.0;
  double x0 = 0.0;
  bool balanced_case = false;  // q x0 <= n branch
  bool holds = false;          // f >= bound up to 1e-12 relative slack
};

FBoundReport f_lower_bound_check(const Composition& comp, double p);

// Inverse-CDF sampler for Bin(v, rho), optionally conditioned on a minimum
// value.  The table is exact to double rounding; sampling consumes one
// uniform per draw.
struct BinomialTable {
  BinomialTable(uint32_t v, double rho, uint32_t min_value = 0);

  uint32_t sample(Rng& rng) const;

  uint32_t v = 0;
  double rho = 0.0;
  uint32_t min_value = 0;
  std::vector<double> cdf;  // cdf[i] = P(B <= min_value + i | B >= min_value)
};

// 7 rho^{-q} prod_{i=1}^q 1/(v+i)
double bins_bound(uint32_t v, double rho, uint32_t q);

// Monte Carlo estimate of E[prod_{i=1}^q 1/(B+i-1)] for B = Bin(v, rho)
// conditioned on B >= 1 (the product is undefined at B = 0).  Returns
// (estimate, standard error); deterministic in (trials, seed).
std::pair<double, double> bins_estimate(uint32_t v, double rho, uint32_t q,
                                        uint64_t trials, uint64_t seed);

struct BinsReport {
  double estimate = 0.0;
  double stderr_est = 0.0;
  double bound = 0.0;
  bool holds = false;
  uint64_t trials = 0;
};

// Rejects parameters with P(B=0) >= 1e-12 (the unconditioned expectation is
// infinite there) and trials < 1e5; q = 0 is the empty product.
BinsReport bins_check(uint32_t v, double rho, uint32_t q, uint64_t trials, uint64_t seed);

// Vertices whose availability under the (possibly partial) colouring given
// by disjoint classes falls below the threshold.  A colour i is available at
// v when no edge {v,x,y} has both x and y in class i; colored vertices are
// scored the same way.  k = 3 only.
std::vector<uint32_t> b_set(const Hypergraph& h,
                            const std::vector<std::vector<uint32_t>>& classes,
                            double threshold);

// Sparse-set predicates.  l1: some S with |S| <= sigma n has e2(S) >= theta|S|.
// l2: the same for e3.  l3: some S with |S| <= sigma n contains T with
// |T| >= tau |S| and d_{S,1}(v) >= Delta for all v in T.  l4: d_{S,2}.
enum class DensityLemma { l1, l2, l3, l4 };

struct DensityViolation {
  std::vector<uint32_t> s;
  std::vector<uint32_t> t;  // empty for l1 / l2
};

struct DensityConfig {
  double sigma = 0.0;
  double theta = 0.0;
  double delta_deg = 0.0;  // degree threshold of l3 / l4
  double tau = 0.0;
};

// All subsets; n <= 15 enforced.  T is taken maximal (every member of S at
// or above the degree threshold), which decides the existential exactly.
std::vector<DensityViolation> density_violations_exhaustive(const Hypergraph& h,
                                                            DensityLemma which,
                                                            const DensityConfig& cfg);

// Random S of uniform size in [1, sigma n]; one-sided search, so an empty
// result is evidence rather than proof.
std::vector<DensityViolation> density_violations_sampled(const Hypergraph& h,
                                                         DensityLemma which,
                                                         const DensityConfig& cfg,
                                                         uint64_t trials, uint64_t seed);

// Binomial tail bounds for X = Bin(n, p) with np_bar = n p:
//   lower:   P(X <= (1-eps) np) <= exp(-eps^2 np / 2)
//   upper1:  P(X >= (1+eps) np) <= exp(-eps^2 np / 3), eps <= 1
//   upper2:  P(X >= mu np)      <= (e / mu)^{mu np}
enum class ChernoffKind { lower, upper1, upper2 };

double chernoff(double np_bar, double eps_dev, ChernoffKind which, double mu = 0.0);

}  // namespace hcg
