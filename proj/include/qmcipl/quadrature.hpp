#pragma once

#include <functional>
#include <span>
#include <string>

namespace qmcipl {

/// A test integrand over [0,1)^s with a closed-form integral.
struct Integrand {
  std::string name;
  int s = 1;
  double param = 0.0;  // r for f1, w for f2/f3
  std::function<double(std::span<const double>)> eval;
  double exact = 0.0;
};

/// prod_j exp(-x_j / 2^{j^r}); lies in the target space for u_j = 2^{-j^r}.
Integrand make_f1(int s, double r);
/// prod_j (1 + w^j/21 * (-10 + 42 x^2 - 42 x^5 + 21 x^6)); integral 1.
Integrand make_f2(int s, double w);
/// prod_j (1 + w^j/8 * (31 - 84 x^2 + 8 x^3 + 70 x^4 - 28 x^6 + 8 x^7
///                      - 16 cos(1) - 16 sin(x))); integral 1.
Integrand make_f3(int s, double w);

Integrand make_integrand(const std::string& name, int s, double param);

/// Equal-weight QMC average over row-major points, compensated summation.
double integrate(const Integrand& f, std::span<const double> points);

}  // namespace qmcipl
