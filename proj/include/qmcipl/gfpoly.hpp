#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qmcipl {

/// Polynomial over the prime field Z_b. Coefficient i is the coefficient of
/// x^i; the sequence carries no trailing zeros, so the zero polynomial is the
/// empty sequence. The integer encoding sum_i c_i * b^i identifies
/// polynomials with non-negative integers and drives all orderings and file
/// formats.
class GFPolynomial {
 public:
  GFPolynomial(uint32_t base, std::vector<uint8_t> coeffs);
  static GFPolynomial zero(uint32_t base);
  static GFPolynomial one(uint32_t base);
  static GFPolynomial monomial(uint32_t base, int degree, uint8_t coeff = 1);
  static GFPolynomial from_encoding(uint32_t base, uint64_t enc);

  uint32_t base() const { return base_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of a non-zero polynomial. The zero polynomial has no finite
  // degree; query is_zero() instead of calling this on it.
  int degree() const;
  uint8_t coeff(int i) const;
  const std::vector<uint8_t>& coeffs() const { return coeffs_; }
  uint64_t encoding() const;
  std::string to_string() const;

  friend bool operator==(const GFPolynomial&, const GFPolynomial&) = default;

 private:
  uint32_t base_;
  std::vector<uint8_t> coeffs_;
};

GFPolynomial add(const GFPolynomial& a, const GFPolynomial& b);
GFPolynomial sub(const GFPolynomial& a, const GFPolynomial& b);
GFPolynomial mul(const GFPolynomial& a, const GFPolynomial& b);
GFPolynomial mod(const GFPolynomial& a, const GFPolynomial& p);
GFPolynomial mulmod(const GFPolynomial& a, const GFPolynomial& b,
                    const GFPolynomial& p);
GFPolynomial modpow(const GFPolynomial& a, uint64_t e, const GFPolynomial& p);

/// sum_j k[j] * q[j] in Z_b[x]; no reduction is applied.
GFPolynomial inner_product(std::span<const GFPolynomial> k,
                           std::span<const GFPolynomial> q);

/// Deterministic irreducibility test by trial division against all monic
/// polynomials of degree <= deg(p)/2.
bool is_irreducible(const GFPolynomial& p);

/// The irreducible polynomial of the given degree with minimal integer
/// encoding.
GFPolynomial smallest_irreducible(uint32_t base, int degree);

/// Smallest-encoding generator of the multiplicative group of Z_b[x]/(p);
/// p must be irreducible. Verified by the factorization of b^deg(p) - 1.
GFPolynomial find_primitive(const GFPolynomial& p);

}  // namespace qmcipl
