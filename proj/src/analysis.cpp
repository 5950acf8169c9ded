#include "hcg/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace hcg {
namespace {

double factorial(uint32_t k) {
  double r = 1.0;
  for (uint32_t i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

BoundParams eval_bounds(double d, uint32_t k, double eps, double delta) {
  if (!(d > 1.0)) throw std::invalid_argument("eval_bounds: d must exceed 1");
  if (k < 3) throw std::invalid_argument("eval_bounds: k must be at least 3");
  if (!(eps > 0.0 && eps < 0.5))
    throw std::invalid_argument("eval_bounds: eps must lie in (0, 1/2)");
  if (!(delta > 0.0)) throw std::invalid_argument("eval_bounds: delta must be positive");

  BoundParams b;
  b.d = d;
  b.k = k;
  b.eps = eps;
  b.delta = delta;
  const double km1 = k - 1.0;
  const double root = std::pow(km1, 1.0 / km1);
  b.D = std::pow(d / (factorial(k) * std::log(d)), 1.0 / km1);
  b.alpha = (1.0 + eps) * root;
  b.beta_lb = (1.0 - 2.0 * eps) / (2.0 * root);
  b.gamma_lb = eps / root;
  b.theta_rounds = b.alpha * (2.0 * b.beta_lb + b.gamma_lb) / 2.0;
  b.chi_est = std::pow(d / (k * factorial(k - 2) * std::log(d)), 1.0 / km1);
  b.ub = std::pow(d, 2.0 / 3.0 + delta);
  return b;
}

FormulaReport formula_holds(double beta, double gamma, uint32_t k) {
  if (!(beta > 0.0) || !(gamma >= 0.0))
    throw std::invalid_argument("formula_holds: beta must be positive, gamma nonnegative");
  if (k < 3) throw std::invalid_argument("formula_holds: k must be at least 3");
  FormulaReport r;
  r.lhs = 2.0 * std::pow(2.0 * beta + gamma, k) - std::pow(2.0 * beta, k);
  r.rhs = 2.0 * (beta + gamma) / (k - 1.0);
  r.holds = r.lhs > r.rhs;
  return r;
}

uint64_t Composition::n() const {
  return std::accumulate(c.begin(), c.end(), uint64_t{0});
}

FBoundReport f_lower_bound_check(const Composition& comp, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("f_lower_bound_check: p must lie in (0, 1)");
  if (comp.c.empty()) throw std::invalid_argument("f_lower_bound_check: empty composition");

  const double log1mp = std::log1p(-p);  // negative
  const double nd = static_cast<double>(comp.n());
  const double qd = static_cast<double>(comp.q());

  FBoundReport r;
  r.x0 = std::sqrt(2.0 / -log1mp);
  for (uint64_t ci : comp.c) {
    const double x = static_cast<double>(ci);
    r.f += std::exp(x * x / 2.0 * log1mp);
  }
  r.balanced_case = qd * r.x0 <= nd;
  const double expo = r.balanced_case ? nd * nd / (2.0 * qd * qd) : r.x0 * r.x0 / 2.0;
  r.bound = qd * std::exp(expo * log1mp);
  r.holds = r.f >= r.bound * (1.0 - 1e-12);
  return r;
}

BinomialTable::BinomialTable(uint32_t v_, double rho_, uint32_t min_value_)
    : v(v_), rho(rho_), min_value(min_value_) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("BinomialTable: rho must lie in (0, 1)");
  if (min_value > v) throw std::invalid_argument("BinomialTable: min_value exceeds v");
  const double lr = std::log(rho), l1r = std::log1p(-rho);
  const double lg_v1 = std::lgamma(v + 1.0);
  std::vector<double> pmf(v - min_value + 1);
  double total = 0.0;
  for (uint32_t b = min_value; b <= v; ++b) {
    const double lp = lg_v1 - std::lgamma(b + 1.0) - std::lgamma(v - b + 1.0) +
                      b * lr + (v - b) * l1r;
    pmf[b - min_value] = std::exp(lp);
    total += pmf[b - min_value];
  }
  cdf.resize(pmf.size());
  double acc = 0.0;
  for (size_t i = 0; i < pmf.size(); ++i) {
    acc += pmf[i] / total;
    cdf[i] = acc;
  }
  cdf.back() = 1.0;
}

uint32_t BinomialTable::sample(Rng& rng) const {
  const double u = rng.next_unit();
  const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
  const size_t i = std::min<size_t>(it - cdf.begin(), cdf.size() - 1);
  return min_value + static_cast<uint32_t>(i);
}

double bins_bound(uint32_t v, double rho, uint32_t q) {
  double b = 7.0 * std::pow(rho, -static_cast<double>(q));
  for (uint32_t i = 1; i <= q; ++i) b /= static_cast<double>(v) + i;
  return b;
}

std::pair<double, double> bins_estimate(uint32_t v, double rho, uint32_t q,
                                        uint64_t trials, uint64_t seed) {
  if (v == 0) throw std::invalid_argument("bins_estimate: v must be positive");
  if (trials == 0) throw std::invalid_argument("bins_estimate: trials must be positive");
  const BinomialTable table(v, rho, 1);
  constexpr uint64_t kShards = 16;
  Rng root(seed);
  long double sum = 0.0L, sumsq = 0.0L;
  for (uint64_t s = 0; s < kShards; ++s) {
    Rng rng = root.substream(s + 1);
    const uint64_t lo = trials * s / kShards, hi = trials * (s + 1) / kShards;
    for (uint64_t t = lo; t < hi; ++t) {
      const uint32_t b = table.sample(rng);
      double x = 1.0;
      for (uint32_t i = 1; i <= q; ++i) x /= static_cast<double>(b) + i - 1;
      sum += x;
      sumsq += static_cast<long double>(x) * x;
    }
  }
  const double mean = static_cast<double>(sum / trials);
  const double var =
      std::max(0.0L, (sumsq - sum * sum / trials) / (static_cast<long double>(trials) - 1));
  const double se = std::sqrt(static_cast<double>(var) / static_cast<double>(trials));
  return {mean, se};
}

BinsReport bins_check(uint32_t v, double rho, uint32_t q, uint64_t trials, uint64_t seed) {
  if (v == 0) throw std::invalid_argument("bins_check: v must be positive");
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("bins_check: rho must lie in (0, 1)");
  BinsReport r;
  r.bound = bins_bound(v, rho, q);
  r.trials = trials;
  if (q == 0) {
    r.estimate = 1.0;
    r.holds = true;
    return r;
  }
  if (trials < 100000) throw std::invalid_argument("bins_check: trials must be at least 1e5");
  // P(B=0) = (1-rho)^v; the expectation is infinite whenever that is positive,
  // so anything above negligible mass is rejected rather than estimated
  const double p_zero = std::exp(static_cast<double>(v) * std::log1p(-rho));
  if (p_zero >= 1e-12)
    throw std::invalid_argument("bins_check: rejected, P(B=0) = " + std::to_string(p_zero) +
                                " >= 1e-12");
  std::tie(r.estimate, r.stderr_est) = bins_estimate(v, rho, q, trials, seed);
  r.holds = r.estimate <= r.bound + 3.0 * r.stderr_est;
  return r;
}

std::vector<uint32_t> b_set(const Hypergraph& h,
                            const std::vector<std::vector<uint32_t>>& classes,
                            double threshold) {
  if (h.k != 3) throw std::invalid_argument("b_set: k = 3 only");
  const uint32_t q = static_cast<uint32_t>(classes.size());
  std::vector<uint32_t> color(h.n, 0);  // 0 = uncoloured
  for (uint32_t c = 0; c < q; ++c)
    for (uint32_t v : classes[c]) {
      if (v >= h.n) throw std::invalid_argument("b_set: vertex out of range");
      if (color[v] != 0) throw std::invalid_argument("b_set: classes overlap");
      color[v] = c + 1;
    }
  std::vector<uint8_t> blocked(static_cast<size_t>(h.n) * q, 0);
  for (size_t e = 0; e < h.edge_count(); ++e) {
    const auto ed = h.edge(e);
    for (int j = 0; j < 3; ++j) {
      const uint32_t v = ed[j], x = ed[(j + 1) % 3], y = ed[(j + 2) % 3];
      if (color[x] != 0 && color[x] == color[y])
        blocked[static_cast<size_t>(v) * q + color[x] - 1] = 1;
    }
  }
  std::vector<uint32_t> out;
  for (uint32_t v = 0; v < h.n; ++v) {
    uint32_t a = 0;
    for (uint32_t c = 0; c < q; ++c) a += !blocked[static_cast<size_t>(v) * q + c];
    if (a < threshold) out.push_back(v);
  }
  return out;
}

namespace {

// Maximal T for l3 / l4; decides the existential since any witness T is a
// subset of it.
std::vector<uint32_t> max_t(const Hypergraph& h, const std::vector<uint32_t>& s,
                            uint32_t j, double delta_deg) {
  std::vector<uint32_t> t;
  for (uint32_t v : s)
    if (static_cast<double>(partial_degree(h, s, v, j)) >= delta_deg) t.push_back(v);
  return t;
}

bool violates(const Hypergraph& h, DensityLemma which, const DensityConfig& cfg,
              const std::vector<uint32_t>& s, std::vector<uint32_t>* t_out) {
  if (s.empty()) return false;
  switch (which) {
    case DensityLemma::l1: {
      const auto st = density_stats(h, s);
      return static_cast<double>(st.e2) >= cfg.theta * static_cast<double>(s.size());
    }
    case DensityLemma::l2: {
      const auto st = density_stats(h, s);
      return static_cast<double>(st.e3) >= cfg.theta * static_cast<double>(s.size());
    }
    case DensityLemma::l3:
    case DensityLemma::l4: {
      const uint32_t j = which == DensityLemma::l3 ? 1 : 2;
      auto t = max_t(h, s, j, cfg.delta_deg);
      if (static_cast<double>(t.size()) < cfg.tau * static_cast<double>(s.size()))
        return false;
      if (t_out) *t_out = std::move(t);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<DensityViolation> density_violations_exhaustive(const Hypergraph& h,
                                                            DensityLemma which,
                                                            const DensityConfig& cfg) {
  if (h.n > 15)
    throw std::invalid_argument("density_violations_exhaustive: n must be at most 15");
  std::vector<DensityViolation> out;
  const double cap = cfg.sigma * h.n;
  for (uint32_t mask = 1; mask < (1u << h.n); ++mask) {
    if (std::popcount(mask) > cap) continue;
    std::vector<uint32_t> s;
    for (uint32_t v = 0; v < h.n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    std::vector<uint32_t> t;
    if (violates(h, which, cfg, s, &t)) out.push_back({std::move(s), std::move(t)});
  }
  return out;
}

std::vector<DensityViolation> density_violations_sampled(const Hypergraph& h,
                                                         DensityLemma which,
                                                         const DensityConfig& cfg,
                                                         uint64_t trials, uint64_t seed) {
  const uint64_t cap = std::min<uint64_t>(
      h.n, static_cast<uint64_t>(std::max(0.0, std::floor(cfg.sigma * h.n))));
  std::vector<DensityViolation> out;
  if (cap == 0) return out;
  Rng rng(seed);
  std::vector<uint32_t> pool(h.n);
  for (uint64_t trial = 0; trial < trials; ++trial) {
    const uint64_t size = 1 + rng.below(cap);
    std::iota(pool.begin(), pool.end(), 0);
    for (uint64_t i = 0; i < size; ++i)
      std::swap(pool[i], pool[i + rng.below(h.n - i)]);
    std::vector<uint32_t> s(pool.begin(), pool.begin() + static_cast<ptrdiff_t>(size));
    std::sort(s.begin(), s.end());
    std::vector<uint32_t> t;
    if (violates(h, which, cfg, s, &t)) out.push_back({std::move(s), std::move(t)});
  }
  return out;
}

double chernoff(double np_bar, double eps_dev, ChernoffKind which, double mu) {
  if (!(np_bar > 0.0)) throw std::invalid_argument("chernoff: np must be positive");
  switch (which) {
    case ChernoffKind::lower:
      if (eps_dev < 0.0) throw std::invalid_argument("chernoff: eps must be nonnegative");
      return std::exp(-eps_dev * eps_dev * np_bar / 2.0);
    case ChernoffKind::upper1:
      if (eps_dev < 0.0 || eps_dev > 1.0)
        throw std::invalid_argument("chernoff: upper1 needs eps in [0, 1]");
      return std::exp(-eps_dev * eps_dev * np_bar / 3.0);
    case ChernoffKind::upper2:
      if (!(mu > 0.0)) throw std::invalid_argument("chernoff: upper2 needs mu > 0");
      return std::pow(std::numbers::e / mu, mu * np_bar);
  }
  throw std::invalid_argument("chernoff: unknown kind");
}

}  // namespace hcg
