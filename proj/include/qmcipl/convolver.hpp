#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qmcipl {

/// Circulant matrix-vector multiplication for arbitrary length N:
/// out[i] = sum_n col[(i - n) mod N] * v[n]. Small N runs the O(N^2) direct
/// sum; otherwise the product is a zero-padded power-of-two linear
/// convolution (padded length >= 2N-1) with wrap-around fold, O(N log N).
/// Plans are immutable after construction and safe to share; scratch is
/// per call.
class CirculantPlan {
 public:
  explicit CirculantPlan(std::size_t n);

  std::size_t length() const { return n_; }
  std::size_t padded_length() const { return padded_; }
  /// Scratch doubles one multiply() call allocates, for memory accounting.
  std::size_t workspace_values() const;

  void multiply(std::span<const double> first_column,
                std::span<const double> v, std::span<double> out) const;

 private:
  std::size_t n_;
  std::size_t padded_;                       // 0 for the direct path
  std::vector<std::size_t> bit_reverse_;
  std::vector<std::complex<double>> roots_;  // exp(-2*pi*i*j/padded), j < padded/2

  void fft(std::span<std::complex<double>> a, bool inverse) const;
};

std::vector<double> circulant_multiply(std::span<const double> first_column,
                                       std::span<const double> v);

}  // namespace qmcipl
