#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qmcipl/digitnet.hpp"
#include "qmcipl/gfpoly.hpp"
#include "qmcipl/weights.hpp"

namespace qmcipl {

/// A fully constructed interlaced polynomial lattice rule: modulus p of
/// degree m (irreducible), generating vector q of d*s nonzero polynomials of
/// degree < m, and the weight profile the rule was built for.
struct RuleSpec {
  uint32_t b = 2;
  int m = 1;
  int s = 1;
  int d = 1;
  GFPolynomial p = GFPolynomial::one(2);
  std::vector<GFPolynomial> q;
  WeightProfile weights = WeightProfile::power_decay(2, 1.0, 1);

  int components() const { return d * s; }
  int point_digits() const { return d * m; }
  uint64_t point_count() const;

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

/// Digits t_1..t_m of the formal Laurent expansion of w/p, deg(w) < deg(p).
std::vector<uint8_t> laurent_digits(const GFPolynomial& w,
                                    const GFPolynomial& p, int m);

/// Point n of the (non-interlaced) polynomial lattice: coordinate j holds
/// the first m digits of n(x) q_j(x) / p(x).
std::vector<DigitVector> lattice_point(const GFPolynomial& p,
                                       std::span<const GFPolynomial> q,
                                       uint64_t n);

/// b^m interlaced points in [0,1)^s, each coordinate carried as d*m exact
/// base-b digits, in natural index order n = 0..b^m-1.
struct PointSet {
  uint32_t b = 2;
  int m = 0;
  int s = 0;
  int d = 1;
  std::vector<DigitVector> coords;  // row-major, point n at [n*s .. n*s+s)

  uint64_t size() const { return s == 0 ? 0 : coords.size() / s; }
  std::span<const DigitVector> point(uint64_t n) const {
    return {coords.data() + n * s, static_cast<std::size_t>(s)};
  }
  /// Row-major binary64 coordinates (exact when d*m*log2(b) <= 52).
  std::vector<double> to_doubles() const;
};

PointSet generate_point_set(const RuleSpec& spec);

/// Dual-lattice membership: tr_m(k) . q == 0 (mod p).
bool in_dual(const GFPolynomial& p, std::span<const GFPolynomial> q,
             std::span<const uint64_t> k);

/// Text export: header "# b m s d N", then one point per line with
/// space-separated coordinates printed to 17 significant digits.
void write_point_set(std::ostream& os, const PointSet& ps);

}  // namespace qmcipl
