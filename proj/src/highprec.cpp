#include "hcg/highprec.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace hcg {
namespace {

constexpr mpfr_prec_t kPrec = 256;

HighPrecValue finish(mpfr_t x) {
  HighPrecValue out;
  out.value = mpfr_get_d(x, MPFR_RNDN);
  char buf[96];
  mpfr_snprintf(buf, sizeof buf, "%.49Re", x);
  out.digits = buf;
  mpfr_clear(x);
  return out;
}

}  // namespace

HighPrecValue hp_bound_D(double d, uint32_t k) {
  if (!(d > 1.0) || k < 3) throw std::invalid_argument("hp_bound_D: need d > 1, k >= 3");
  mpfr_t x, den;
  mpfr_inits2(kPrec, x, den, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(x, d, MPFR_RNDN);
  mpfr_log(den, x, MPFR_RNDN);
  mpfr_fac_ui(x, k, MPFR_RNDN);
  mpfr_mul(den, den, x, MPFR_RNDN);
  mpfr_set_d(x, d, MPFR_RNDN);
  mpfr_div(x, x, den, MPFR_RNDN);
  mpfr_rootn_ui(x, x, k - 1, MPFR_RNDN);
  mpfr_clear(den);
  return finish(x);
}

HighPrecValue hp_chi_estimate(double d, uint32_t k) {
  if (!(d > 1.0) || k < 3)
    throw std::invalid_argument("hp_chi_estimate: need d > 1, k >= 3");
  mpfr_t x, den;
  mpfr_inits2(kPrec, x, den, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(x, d, MPFR_RNDN);
  mpfr_log(den, x, MPFR_RNDN);
  mpfr_fac_ui(x, k - 2, MPFR_RNDN);
  mpfr_mul(den, den, x, MPFR_RNDN);
  mpfr_mul_ui(den, den, k, MPFR_RNDN);
  mpfr_set_d(x, d, MPFR_RNDN);
  mpfr_div(x, x, den, MPFR_RNDN);
  mpfr_rootn_ui(x, x, k - 1, MPFR_RNDN);
  mpfr_clear(den);
  return finish(x);
}

HighPrecFormula hp_formula_sides(double beta, double gamma, uint32_t k) {
  if (k < 3) throw std::invalid_argument("hp_formula_sides: k must be at least 3");
  HighPrecFormula out;
  mpfr_t lhs, t;
  mpfr_inits2(kPrec, lhs, t, static_cast<mpfr_ptr>(nullptr));

  mpfr_set_d(t, beta, MPFR_RNDN);
  mpfr_mul_ui(t, t, 2, MPFR_RNDN);
  mpfr_add_d(lhs, t, gamma, MPFR_RNDN);  // 2 beta + gamma
  mpfr_pow_ui(lhs, lhs, k, MPFR_RNDN);
  mpfr_mul_ui(lhs, lhs, 2, MPFR_RNDN);
  mpfr_pow_ui(t, t, k, MPFR_RNDN);  // (2 beta)^k
  mpfr_sub(lhs, lhs, t, MPFR_RNDN);
  mpfr_clear(t);
  out.lhs = finish(lhs);

  mpfr_t rhs;
  mpfr_init2(rhs, kPrec);
  mpfr_set_d(rhs, beta, MPFR_RNDN);
  mpfr_add_d(rhs, rhs, gamma, MPFR_RNDN);
  mpfr_mul_ui(rhs, rhs, 2, MPFR_RNDN);
  mpfr_div_ui(rhs, rhs, k - 1, MPFR_RNDN);
  out.rhs = finish(rhs);
  return out;
}

}  // namespace hcg
