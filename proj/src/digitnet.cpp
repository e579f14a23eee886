#include "qmcipl/digitnet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmcipl/util.hpp"

namespace qmcipl {

double DigitVector::value() const {
  long double v = 0.0L;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    v = (v + *it) / base;
  return static_cast<double>(v);
}

DigitVector digit_vector_from_value(uint32_t base, double x, int precision) {
  if (x < 0.0 || x >= 1.0)
    throw std::invalid_argument("digit_vector_from_value: x outside [0,1)");
  DigitVector out{base, std::vector<uint8_t>(precision, 0)};
  long double r = x;
  for (int i = 0; i < precision; ++i) {
    r *= base;
    auto d = static_cast<uint32_t>(r);
    if (d >= base) d = base - 1;
    out.digits[i] = static_cast<uint8_t>(d);
    r -= d;
  }
  return out;
}

std::complex<double> walsh(uint32_t b, uint64_t k, const DigitVector& x) {
  if (x.base != b) throw std::invalid_argument("walsh: base mismatch");
  uint64_t expo = 0;
  std::size_t i = 0;
  while (k != 0) {
    uint32_t kappa = static_cast<uint32_t>(k % b);
    uint8_t xi = i < x.digits.size() ? x.digits[i] : 0;
    expo += uint64_t{kappa} * xi;
    k /= b;
    ++i;
  }
  if (b == 2) return {(expo & 1) ? -1.0 : 1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * double(expo % b) / b);
}

std::complex<double> walsh_multi(uint32_t b, std::span<const uint64_t> k,
                                 std::span<const DigitVector> x) {
  if (k.size() != x.size())
    throw std::invalid_argument("walsh_multi: length mismatch");
  std::complex<double> v{1.0, 0.0};
  for (std::size_t j = 0; j < k.size(); ++j) v *= walsh(b, k[j], x[j]);
  return v;
}

namespace {

// Nonzero digit positions of k (1-based, descending).
void digit_positions(uint64_t k, uint32_t b, std::vector<int>& out) {
  out.clear();
  int c = 1;
  while (k != 0) {
    if (k % b != 0) out.push_back(c);
    k /= b;
    ++c;
  }
  std::reverse(out.begin(), out.end());
}

}  // namespace

double mu(double a, uint64_t k, uint32_t b) {
  std::vector<int> cs;
  digit_positions(k, b, cs);
  double v = 0.0;
  for (int c : cs) v += c + a;
  return v;
}

double mu_tilde(double a, int h, int d, uint64_t k, uint32_t b) {
  if (d < 1 || h < 1 || h > d)
    throw std::invalid_argument("mu_tilde: need 1 <= h <= d");
  std::vector<int> cs;
  digit_positions(k, b, cs);
  double v = 0.0;
  for (int c : cs) v += double(d) * (c - 1) + h + a;
  return v;
}

double mu_vector(std::span<const double> a, std::span<const uint64_t> k,
                 uint32_t b) {
  if (a.size() != k.size())
    throw std::invalid_argument("mu_vector: length mismatch");
  double v = 0.0;
  for (std::size_t j = 0; j < k.size(); ++j) v += mu(a[j], k[j], b);
  return v;
}

double mu_tilde_vector(std::span<const double> a, int d,
                       std::span<const uint64_t> k, uint32_t b) {
  if (k.size() != a.size() * static_cast<std::size_t>(d))
    throw std::invalid_argument("mu_tilde_vector: k must have length d*s");
  double v = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (int h = 1; h <= d; ++h) v += mu_tilde(a[j], h, d, k[j * d + h - 1], b);
  }
  return v;
}

uint64_t interlace_int(int d, std::span<const uint64_t> k, uint32_t b) {
  if (static_cast<int>(k.size()) != d)
    throw std::invalid_argument("interlace_int: need d inputs");
  uint64_t out = 0;
  for (int j = 1; j <= d; ++j) {
    uint64_t kj = k[j - 1];
    int i = 0;
    while (kj != 0) {
      uint64_t digit = kj % b;
      if (digit != 0) out += digit * ipow(b, static_cast<unsigned>(d * i + j - 1));
      kj /= b;
      ++i;
    }
  }
  return out;
}

DigitVector interlace_point(int d, std::span<const DigitVector> x) {
  if (static_cast<int>(x.size()) != d)
    throw std::invalid_argument("interlace_point: need d inputs");
  int prec = x[0].precision();
  for (const auto& xi : x) {
    if (xi.precision() != prec)
      throw std::invalid_argument("interlace_point: precision mismatch");
    if (xi.base != x[0].base)
      throw std::invalid_argument("interlace_point: base mismatch");
  }
  DigitVector out{x[0].base, std::vector<uint8_t>(d * prec, 0)};
  for (int i = 1; i <= prec; ++i) {
    for (int j = 1; j <= d; ++j)
      out.digits[d * (i - 1) + j - 1] = x[j - 1].digits[i - 1];
  }
  return out;
}

std::vector<uint64_t> interlace_int_blocks(int d, int s,
                                           std::span<const uint64_t> k,
                                           uint32_t b) {
  if (k.size() != static_cast<std::size_t>(d) * s)
    throw std::invalid_argument("interlace_int_blocks: need d*s inputs");
  std::vector<uint64_t> out;
  out.reserve(s);
  for (int j = 0; j < s; ++j)
    out.push_back(interlace_int(d, k.subspan(j * d, d), b));
  return out;
}

std::vector<DigitVector> interlace_point_blocks(int d, int s,
                                                std::span<const DigitVector> x) {
  if (x.size() != static_cast<std::size_t>(d) * s)
    throw std::invalid_argument("interlace_point_blocks: need d*s inputs");
  std::vector<DigitVector> out;
  out.reserve(s);
  for (int j = 0; j < s; ++j)
    out.push_back(interlace_point(d, x.subspan(j * d, d)));
  return out;
}

}  // namespace qmcipl
