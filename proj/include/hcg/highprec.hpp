#pragma once

#include <cstdint>
#include <string>

namespace hcg {

// 256-bit re-evaluations of the bound formulas, used to cross-check the
// double-precision path.  digits holds the value in scientific notation
// with 50 significant digits.
struct HighPrecValue {
  double value = 0.0;
  std::string digits;
};

// (d / (k! log d))^{1/(k-1)}
HighPrecValue hp_bound_D(double d, uint32_t k);

// (d / (k (k-2)! log d))^{1/(k-1)}
HighPrecValue hp_chi_estimate(double d, uint32_t k);

struct HighPrecFormula {
  HighPrecValue lhs;  // 2 (2 beta + gamma)^k - (2 beta)^k
  HighPrecValue rhs;  // 2 (beta + gamma) / (k-1)
};

HighPrecFormula hp_formula_sides(double beta, double gamma, uint32_t k);

}  // namespace hcg
