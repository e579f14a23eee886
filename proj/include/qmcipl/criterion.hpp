#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qmcipl/digitnet.hpp"
#include "qmcipl/lattice.hpp"
#include "qmcipl/weights.hpp"

namespace qmcipl {

/// psi_{a,h,m}(x) = prod_{i=1..m} (1 + eta(xi_i) / b^{d(i-1)+h+a}) with
/// eta(0) = b-1 and eta(xi) = -1 otherwise.
double psi(double a, int h, int m, int d, const DigitVector& x);

/// Per-digit factors of psi for one interlaced slot, precomputed so that a
/// psi evaluation is m table lookups and multiplies. Factors are held in
/// extended precision: criterion values sit near machine epsilon at the
/// largest experiment sizes, and binary64 products would bury them in
/// rounding bias.
class PsiTable {
 public:
  static PsiTable build(uint32_t b, int m, int d, int h, double a);

  long double value(std::span<const uint8_t> digits) const {
    long double v = 1.0L;
    for (int i = 0; i < m_; ++i) v *= factors_[i * b_ + digits[i]];
    return v;
  }
  long double value_zero() const { return zero_value_; }
  // Factor of digit position i (0-based) holding the given digit.
  long double factor(int i, uint8_t digit) const { return factors_[i * b_ + digit]; }

 private:
  uint32_t b_ = 2;
  int m_ = 0;
  std::vector<long double> factors_;  // factors_[(i-1)*b + digit]
  long double zero_value_ = 1.0L;
};

/// The quality criterion B_u(q,p) for the first tau components (all d*s by
/// default): the mean over the point set of per-point psi products, minus 1.
/// Equals the dual-lattice sum of b^{-mu~} over k with k_j < b^m.
double b_u(const RuleSpec& spec, std::optional<int> tau = std::nullopt);

/// C_u - 1, accumulated in one-plus form so magnitudes near b^{-dm} survive.
double c_u_minus_one(const RuleSpec& spec);
double c_u(const RuleSpec& spec);

struct CriterionValue {
  double b_u = 0.0;
  double c_u_minus_one = 0.0;
  double c_u() const { return 1.0 + c_u_minus_one; }
  double wce_bound() const { return c_u_minus_one + c_u() * b_u; }
};

CriterionValue wce_bound(const RuleSpec& spec);

/// The concave map used with Jensen's inequality: phi(b^-x) = b^-(x^lambda)
/// on the power branch, continued linearly (tangent) past the knot
/// (x~_lambda for b = 2, 1/b otherwise). phi(0) = 0; 0 < lambda <= 1.
double phi(double x, double lambda, uint32_t b);
double phi_inverse(double y, double lambda, uint32_t b);

/// The CBC quality guarantee: phi^-1 of the mean of phi(b^-mu(a;k)) over
/// nonzero k with k_j < b^{dm}. Desk-scale sizes only; enumeration runs in
/// increasing mu with a 1e-18-relative tail cutoff.
double theorem2_bound(const WeightProfile& weights, uint32_t b, int m, int d,
                      int s, double lambda);

}  // namespace qmcipl
