#include "qmcipl/lattice.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qmcipl/util.hpp"

namespace qmcipl {

uint64_t RuleSpec::point_count() const { return ipow(b, m); }

void RuleSpec::validate() const {
  if (!is_prime(b)) throw std::invalid_argument("RuleSpec: b must be prime");
  if (m < 1 || s < 1 || d < 1)
    throw std::invalid_argument("RuleSpec: m, s, d must be >= 1");
  if (p.base() != b || p.is_zero() || p.degree() != m)
    throw std::invalid_argument("RuleSpec: modulus must have degree m over Z_b");
  if (!is_irreducible(p))
    throw std::invalid_argument("RuleSpec: modulus must be irreducible");
  if (q.size() != static_cast<std::size_t>(components()))
    throw std::invalid_argument("RuleSpec: generating vector must have d*s entries");
  for (const auto& qj : q) {
    if (qj.base() != b || qj.is_zero() || qj.degree() >= m)
      throw std::invalid_argument(
          "RuleSpec: generating polynomials must be nonzero with degree < m");
  }
  if (weights.base() != b)
    throw std::invalid_argument("RuleSpec: weight profile base mismatch");
  if (weights.size() < s)
    throw std::invalid_argument("RuleSpec: weight profile covers fewer than s coordinates");
}

std::vector<uint8_t> laurent_digits(const GFPolynomial& w,
                                    const GFPolynomial& p, int m) {
  if (p.is_zero() || p.degree() != m)
    throw std::invalid_argument("laurent_digits: modulus must have degree m");
  if (!w.is_zero() && w.degree() >= m)
    throw std::invalid_argument("laurent_digits: numerator degree must be < m");
  const uint32_t b = p.base();
  // Inverse of the leading coefficient of p in Z_b.
  uint32_t lead_inv = 1;
  {
    uint32_t lead = p.coeffs().back(), acc = 1, t = lead;
    for (uint32_t e = b - 2; e != 0; e >>= 1) {
      if (e & 1) acc = acc * t % b;
      t = t * t % b;
    }
    lead_inv = lead == 1 ? 1 : acc;
  }

  // r holds the current remainder, coefficients 0..m-1. Each step peels off
  // one Laurent digit: t = lead coeff of x*r over x^m, then r <- x*r - t*p.
  std::vector<uint8_t> r(m, 0);
  for (int i = 0; i <= (w.is_zero() ? -1 : w.degree()); ++i) r[i] = w.coeff(i);
  std::vector<uint8_t> digits(m, 0);
  for (int l = 0; l < m; ++l) {
    uint32_t t = r[m - 1] * lead_inv % b;
    digits[l] = static_cast<uint8_t>(t);
    for (int i = m - 1; i >= 1; --i)
      r[i] = static_cast<uint8_t>((r[i - 1] + b * b - t * p.coeff(i) % b) % b);
    r[0] = static_cast<uint8_t>((b * b - t * p.coeff(0) % b) % b);
  }
  return digits;
}

std::vector<DigitVector> lattice_point(const GFPolynomial& p,
                                       std::span<const GFPolynomial> q,
                                       uint64_t n) {
  const uint32_t b = p.base();
  const int m = p.degree();
  if (n >= ipow(b, m))
    throw std::invalid_argument("lattice_point: point index out of range");
  GFPolynomial npoly = GFPolynomial::from_encoding(b, n);
  std::vector<DigitVector> out;
  out.reserve(q.size());
  for (const auto& qj : q) {
    GFPolynomial w = mulmod(npoly, qj, p);
    out.push_back(DigitVector{b, laurent_digits(w, p, m)});
  }
  return out;
}

PointSet generate_point_set(const RuleSpec& spec) {
  spec.validate();
  PointSet ps;
  ps.b = spec.b;
  ps.m = spec.m;
  ps.s = spec.s;
  ps.d = spec.d;
  const uint64_t n_points = spec.point_count();
  ps.coords.reserve(n_points * spec.s);
  for (uint64_t n = 0; n < n_points; ++n) {
    auto raw = lattice_point(spec.p, spec.q, n);
    auto interlaced = interlace_point_blocks(spec.d, spec.s, raw);
    for (auto& c : interlaced) ps.coords.push_back(std::move(c));
  }
  return ps;
}

std::vector<double> PointSet::to_doubles() const {
  std::vector<double> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(c.value());
  return out;
}

bool in_dual(const GFPolynomial& p, std::span<const GFPolynomial> q,
             std::span<const uint64_t> k) {
  if (q.size() != k.size())
    throw std::invalid_argument("in_dual: length mismatch");
  const uint32_t b = p.base();
  const int m = p.degree();
  const uint64_t mask = ipow(b, m);
  GFPolynomial acc = GFPolynomial::zero(b);
  for (std::size_t j = 0; j < k.size(); ++j) {
    GFPolynomial trunc = GFPolynomial::from_encoding(b, k[j] % mask);
    acc = add(acc, mul(trunc, q[j]));
  }
  return mod(acc, p).is_zero();
}

void write_point_set(std::ostream& os, const PointSet& ps) {
  os << "# " << ps.b << " " << ps.m << " " << ps.s << " " << ps.d << " "
     << ps.size() << "\n";
  char buf[32];
  for (uint64_t n = 0; n < ps.size(); ++n) {
    auto row = ps.point(n);
    for (int j = 0; j < ps.s; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", row[j].value());
      os << (j ? " " : "") << buf;
    }
    os << "\n";
  }
}

}  // namespace qmcipl
