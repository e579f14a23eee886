#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qmcipl {

// Constants of the weighted-space Walsh coefficient bound.
double walsh_min_modulus(uint32_t b);   // m_b = 2 sin(pi/b)
double walsh_max_modulus(uint32_t b);   // M_b
double walsh_coeff_constant(uint32_t b);  // C_b

/// Coordinate weights u_1 >= u_2 >= ... > 0 together with the derived
/// exponents a_j = -log_b(C_b * u_j / m_b) that enter the criterion. The
/// power-decay preset u_j = 2^{-j^r} keeps a_j = j^r exact for b = 2.
class WeightProfile {
 public:
  static WeightProfile power_decay(uint32_t b, double r, int count);
  static WeightProfile from_weights(uint32_t b, std::vector<double> u);

  uint32_t base() const { return base_; }
  std::optional<double> decay() const { return r_; }
  int size() const { return static_cast<int>(a_.size()); }
  double weight(int j) const { return u_.at(j - 1); }    // u_j, 1-based
  double exponent(int j) const { return a_.at(j - 1); }  // a_j, 1-based
  const std::vector<double>& exponents() const { return a_; }
  const std::vector<double>& raw_weights() const { return u_; }

  /// Copy extended (or truncated) to hold at least `count` coordinates.
  WeightProfile resized(int count) const;

 private:
  WeightProfile() = default;
  uint32_t base_ = 2;
  std::optional<double> r_;
  std::vector<double> u_;
  std::vector<double> a_;
};

}  // namespace qmcipl
