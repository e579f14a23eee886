#include "qmcipl/weights.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmcipl {

double walsh_min_modulus(uint32_t b) {
  return 2.0 * std::sin(std::numbers::pi / b);
}

double walsh_max_modulus(uint32_t b) {
  if (b % 2 == 0) return 2.0;
  return 2.0 * std::sin((b + 1) * std::numbers::pi / (2.0 * b));
}

double walsh_coeff_constant(uint32_t b) {
  if (b == 2) return 2.0;
  double mb = walsh_min_modulus(b);
  double Mb = walsh_max_modulus(b);
  return Mb + b * mb / (b - Mb);
}

WeightProfile WeightProfile::power_decay(uint32_t b, double r, int count) {
  if (r <= 0.0) throw std::invalid_argument("WeightProfile: need r > 0");
  if (count < 1) throw std::invalid_argument("WeightProfile: need count >= 1");
  WeightProfile w;
  w.base_ = b;
  w.r_ = r;
  w.u_.resize(count);
  w.a_.resize(count);
  const double log_b = std::log(double(b));
  const double shift = std::log(walsh_min_modulus(b) / walsh_coeff_constant(b)) / log_b;
  for (int j = 1; j <= count; ++j) {
    double jr = std::pow(double(j), r);
    w.u_[j - 1] = std::exp2(-jr);
    // For b = 2 the shift vanishes and a_j = j^r exactly.
    w.a_[j - 1] = (b == 2) ? jr : jr * std::numbers::ln2 / log_b + shift;
  }
  return w;
}

WeightProfile WeightProfile::from_weights(uint32_t b, std::vector<double> u) {
  if (u.empty()) throw std::invalid_argument("WeightProfile: empty weights");
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (!(u[j] > 0.0))
      throw std::invalid_argument("WeightProfile: weights must be positive");
    if (j > 0 && u[j] > u[j - 1])
      throw std::invalid_argument("WeightProfile: weights must be non-increasing");
  }
  WeightProfile w;
  w.base_ = b;
  w.u_ = std::move(u);
  w.a_.resize(w.u_.size());
  const double log_b = std::log(double(b));
  const double ratio = walsh_coeff_constant(b) / walsh_min_modulus(b);
  for (std::size_t j = 0; j < w.u_.size(); ++j)
    w.a_[j] = -std::log(ratio * w.u_[j]) / log_b;
  return w;
}

WeightProfile WeightProfile::resized(int count) const {
  if (count == size()) return *this;
  if (r_) return power_decay(base_, *r_, count);
  if (count > size())
    throw std::invalid_argument("WeightProfile: explicit weights cover too few coordinates");
  WeightProfile w = *this;
  w.u_.resize(count);
  w.a_.resize(count);
  return w;
}

}  // namespace qmcipl
