#include "qmcipl/gfpoly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "qmcipl/util.hpp"

namespace qmcipl {

namespace {

void check_base(uint32_t base) {
  if (base < 2 || base > 251 || !is_prime(base))
    throw std::invalid_argument("GFPolynomial: base must be a prime < 256");
}

void check_same_base(const GFPolynomial& a, const GFPolynomial& b) {
  if (a.base() != b.base())
    throw std::invalid_argument("GFPolynomial: mismatched bases");
}

void trim(std::vector<uint8_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Multiplicative inverse in Z_b, b prime.
uint32_t field_inverse(uint32_t v, uint32_t b) {
  uint32_t r = 1, base = v % b;
  for (uint32_t e = b - 2; e != 0; e >>= 1) {
    if (e & 1) r = r * base % b;
    base = base * base % b;
  }
  return r;
}

}  // namespace

GFPolynomial::GFPolynomial(uint32_t base, std::vector<uint8_t> coeffs)
    : base_(base), coeffs_(std::move(coeffs)) {
  check_base(base_);
  for (uint8_t c : coeffs_) {
    if (c >= base_)
      throw std::invalid_argument("GFPolynomial: coefficient out of range");
  }
  trim(coeffs_);
}

GFPolynomial GFPolynomial::zero(uint32_t base) { return {base, {}}; }

GFPolynomial GFPolynomial::one(uint32_t base) { return {base, {1}}; }

GFPolynomial GFPolynomial::monomial(uint32_t base, int degree, uint8_t coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<uint8_t> c(degree + 1, 0);
  c[degree] = coeff;
  return {base, std::move(c)};
}

GFPolynomial GFPolynomial::from_encoding(uint32_t base, uint64_t enc) {
  check_base(base);
  std::vector<uint8_t> c;
  while (enc != 0) {
    c.push_back(static_cast<uint8_t>(enc % base));
    enc /= base;
  }
  return {base, std::move(c)};
}

int GFPolynomial::degree() const {
  if (is_zero())
    throw std::logic_error("degree() of the zero polynomial is undefined");
  return static_cast<int>(coeffs_.size()) - 1;
}

uint8_t GFPolynomial::coeff(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
  return coeffs_[i];
}

uint64_t GFPolynomial::encoding() const {
  uint64_t enc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (enc > (std::numeric_limits<uint64_t>::max() - *it) / base_)
      throw std::overflow_error("GFPolynomial: encoding exceeds 64 bits");
    enc = enc * base_ + *it;
  }
  return enc;
}

std::string GFPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    uint8_t c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

GFPolynomial add(const GFPolynomial& a, const GFPolynomial& b) {
  check_same_base(a, b);
  uint32_t p = a.base();
  std::vector<uint8_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<uint8_t>((a.coeff(i) + b.coeff(i)) % p);
  return {p, std::move(c)};
}

GFPolynomial sub(const GFPolynomial& a, const GFPolynomial& b) {
  check_same_base(a, b);
  uint32_t p = a.base();
  std::vector<uint8_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<uint8_t>((p + a.coeff(i) - b.coeff(i)) % p);
  return {p, std::move(c)};
}

GFPolynomial mul(const GFPolynomial& a, const GFPolynomial& b) {
  check_same_base(a, b);
  uint32_t p = a.base();
  if (a.is_zero() || b.is_zero()) return GFPolynomial::zero(p);
  std::vector<uint8_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = static_cast<uint8_t>(
          (c[i + j] + uint32_t{a.coeffs()[i]} * b.coeffs()[j]) % p);
    }
  }
  return {p, std::move(c)};
}

GFPolynomial mod(const GFPolynomial& a, const GFPolynomial& p) {
  check_same_base(a, p);
  if (p.is_zero()) throw std::invalid_argument("mod: zero modulus");
  uint32_t b = a.base();
  int dp = p.degree();
  std::vector<uint8_t> r(a.coeffs());
  uint32_t lead_inv = field_inverse(p.coeffs().back(), b);
  for (int i = static_cast<int>(r.size()) - 1; i >= dp; --i) {
    if (r[i] == 0) continue;
    uint32_t f = r[i] * lead_inv % b;
    for (int j = 0; j <= dp; ++j) {
      r[i - dp + j] = static_cast<uint8_t>(
          (r[i - dp + j] + b * b - f * p.coeffs()[j] % b) % b);
    }
  }
  r.resize(std::min<std::size_t>(r.size(), dp));
  return {b, std::move(r)};
}

GFPolynomial mulmod(const GFPolynomial& a, const GFPolynomial& b,
                    const GFPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("mulmod: zero modulus");
  if (p.degree() < 1) throw std::invalid_argument("mulmod: constant modulus");
  return mod(mul(a, b), p);
}

GFPolynomial modpow(const GFPolynomial& a, uint64_t e, const GFPolynomial& p) {
  GFPolynomial r = mod(GFPolynomial::one(a.base()), p);
  GFPolynomial base = mod(a, p);
  while (e != 0) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

GFPolynomial inner_product(std::span<const GFPolynomial> k,
                           std::span<const GFPolynomial> q) {
  if (k.size() != q.size())
    throw std::invalid_argument("inner_product: length mismatch");
  if (k.empty()) throw std::invalid_argument("inner_product: empty vectors");
  GFPolynomial acc = GFPolynomial::zero(k[0].base());
  for (std::size_t j = 0; j < k.size(); ++j) acc = add(acc, mul(k[j], q[j]));
  return acc;
}

bool is_irreducible(const GFPolynomial& p) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("is_irreducible: degree must be >= 1");
  uint32_t b = p.base();
  int dp = p.degree();
  if (dp == 1) return true;
  for (int t = 1; t <= dp / 2; ++t) {
    // Monic candidates of degree t are the encodings [b^t, 2*b^t).
    uint64_t lo = ipow(b, t);
    for (uint64_t enc = lo; enc < 2 * lo; ++enc) {
      if (mod(p, GFPolynomial::from_encoding(b, enc)).is_zero()) return false;
    }
  }
  return true;
}

GFPolynomial smallest_irreducible(uint32_t base, int degree) {
  check_base(base);
  if (degree < 1)
    throw std::invalid_argument("smallest_irreducible: degree must be >= 1");
  uint64_t lo = ipow(base, degree);
  for (uint64_t enc = lo; enc < lo * base; ++enc) {
    GFPolynomial cand = GFPolynomial::from_encoding(base, enc);
    if (is_irreducible(cand)) return cand;
  }
  throw std::logic_error("smallest_irreducible: search exhausted");
}

GFPolynomial find_primitive(const GFPolynomial& p) {
  if (!is_irreducible(p))
    throw std::invalid_argument("find_primitive: modulus not irreducible");
  uint32_t b = p.base();
  int m = p.degree();
  uint64_t group_order = ipow(b, m) - 1;
  if (group_order == 1) return GFPolynomial::one(b);

  std::vector<uint64_t> prime_factors;
  uint64_t n = group_order;
  for (uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      prime_factors.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) prime_factors.push_back(n);

  const GFPolynomial unit = GFPolynomial::one(b);
  for (uint64_t enc = 2; enc <= group_order; ++enc) {
    GFPolynomial cand = GFPolynomial::from_encoding(b, enc);
    bool primitive = true;
    for (uint64_t f : prime_factors) {
      if (modpow(cand, group_order / f, p) == unit) {
        primitive = false;
        break;
      }
    }
    if (primitive) return cand;
  }
  throw std::logic_error("find_primitive: no generator found");
}

}  // namespace qmcipl
