#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qmcipl {

/// A point of [0,1) held as its leading base-b digits: x = sum_i d_i b^{-i}
/// with digits[i-1] = d_i. Exact; conversion to binary64 is exact whenever
/// precision * log2(b) <= 52.
struct DigitVector {
  uint32_t base = 2;
  std::vector<uint8_t> digits;

  int precision() const { return static_cast<int>(digits.size()); }
  double value() const;
};

DigitVector digit_vector_from_value(uint32_t base, double x, int precision);

/// k-th base-b Walsh function evaluated at x. Digits of x beyond the stored
/// precision are treated as zero. For b = 2 the value is +-1 and no
/// trigonometry is involved.
std::complex<double> walsh(uint32_t b, uint64_t k, const DigitVector& x);

std::complex<double> walsh_multi(uint32_t b, std::span<const uint64_t> k,
                                 std::span<const DigitVector> x);

/// mu(a;k) = sum over nonzero base-b digits of k at positions c of (c + a);
/// mu(a;0) = 0.
double mu(double a, uint64_t k, uint32_t b);

/// mu~(a,h;k) = sum over nonzero digit positions c of d*(c-1) + h + a, the
/// interlaced variant with component slot h in 1..d.
double mu_tilde(double a, int h, int d, uint64_t k, uint32_t b);

double mu_vector(std::span<const double> a, std::span<const uint64_t> k,
                 uint32_t b);

/// k has length d*s where s = a.size(); slot (j,h) weighs k[d*(j-1)+h-1].
double mu_tilde_vector(std::span<const double> a, int d,
                       std::span<const uint64_t> k, uint32_t b);

/// Digit interlacing on integers: digit i of input j lands at base-b
/// position d*i + j - 1. Bijection from {0..b^m-1}^d onto {0..b^{dm}-1}.
uint64_t interlace_int(int d, std::span<const uint64_t> k, uint32_t b);

/// Digit interlacing on points: digit i of input j lands at output digit
/// position d*(i-1) + j. All inputs must share one precision.
DigitVector interlace_point(int d, std::span<const DigitVector> x);

std::vector<uint64_t> interlace_int_blocks(int d, int s,
                                           std::span<const uint64_t> k,
                                           uint32_t b);
std::vector<DigitVector> interlace_point_blocks(int d, int s,
                                                std::span<const DigitVector> x);

}  // namespace qmcipl
