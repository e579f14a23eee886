#include "qmcipl/convolver.hpp"

#include <numbers>
#include <stdexcept>

namespace qmcipl {

namespace {
constexpr std::size_t kDirectThreshold = 64;
}

CirculantPlan::CirculantPlan(std::size_t n) : n_(n), padded_(0) {
  if (n == 0) throw std::invalid_argument("CirculantPlan: empty length");
  if (n < kDirectThreshold) return;

  std::size_t p = 1;
  while (p < 2 * n - 1) p <<= 1;
  padded_ = p;

  bit_reverse_.resize(p);
  int log2p = 0;
  while ((std::size_t{1} << log2p) < p) ++log2p;
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t r = 0;
    for (int bit = 0; bit < log2p; ++bit)
      if (i & (std::size_t{1} << bit)) r |= std::size_t{1} << (log2p - 1 - bit);
    bit_reverse_[i] = r;
  }
  roots_.resize(p / 2);
  for (std::size_t j = 0; j < p / 2; ++j)
    roots_[j] = std::polar(1.0, -2.0 * std::numbers::pi * double(j) / double(p));
}

std::size_t CirculantPlan::workspace_values() const {
  return padded_ == 0 ? 0 : 2 * 2 * padded_;  // two complex buffers
}

void CirculantPlan::fft(std::span<std::complex<double>> a, bool inverse) const {
  const std::size_t p = padded_;
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t j = bit_reverse_[i];
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= p; len <<= 1) {
    const std::size_t stride = p / len;
    for (std::size_t start = 0; start < p; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> w = roots_[k * stride];
        if (inverse) w = std::conj(w);
        auto u = a[start + k];
        auto t = a[start + k + len / 2] * w;
        a[start + k] = u + t;
        a[start + k + len / 2] = u - t;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / double(p);
    for (auto& x : a) x *= scale;
  }
}

void CirculantPlan::multiply(std::span<const double> first_column,
                             std::span<const double> v,
                             std::span<double> out) const {
  if (first_column.size() != n_ || v.size() != n_ || out.size() != n_)
    throw std::invalid_argument("CirculantPlan: length mismatch");

  if (padded_ == 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      double acc = 0.0;
      for (std::size_t n = 0; n < n_; ++n)
        acc += first_column[(i + n_ - n) % n_] * v[n];
      out[i] = acc;
    }
    return;
  }

  std::vector<std::complex<double>> a(padded_), b(padded_);
  for (std::size_t i = 0; i < n_; ++i) {
    a[i] = first_column[i];
    b[i] = v[i];
  }
  fft(a, false);
  fft(b, false);
  for (std::size_t i = 0; i < padded_; ++i) a[i] *= b[i];
  fft(a, true);
  // Linear convolution occupies entries 0..2N-2; fold the tail back.
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = a[i].real();
    if (i + n_ <= 2 * n_ - 2) acc += a[i + n_].real();
    out[i] = acc;
  }
}

std::vector<double> circulant_multiply(std::span<const double> first_column,
                                       std::span<const double> v) {
  if (first_column.size() != v.size())
    throw std::invalid_argument("circulant_multiply: length mismatch");
  CirculantPlan plan(first_column.size());
  std::vector<double> out(v.size());
  plan.multiply(first_column, v, out);
  return out;
}

}  // namespace qmcipl
