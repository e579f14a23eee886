#include "qmcipl/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qmcipl/util.hpp"

namespace qmcipl {

Integrand make_f1(int s, double r) {
  if (s < 1 || r <= 0.0) throw std::invalid_argument("make_f1: need s >= 1, r > 0");
  std::vector<double> coeff(s);
  double exact = 1.0;
  for (int j = 1; j <= s; ++j) {
    coeff[j - 1] = std::exp2(-std::pow(double(j), r));  // 2^{-j^r}
    // int_0^1 exp(-c x) dx = (1 - e^-c) / c
    exact *= -std::expm1(-coeff[j - 1]) / coeff[j - 1];
  }
  Integrand f;
  f.name = "f1";
  f.s = s;
  f.param = r;
  f.exact = exact;
  f.eval = [coeff = std::move(coeff)](std::span<const double> x) {
    double e = 0.0;
    for (std::size_t j = 0; j < coeff.size(); ++j) e += coeff[j] * x[j];
    return std::exp(-e);
  };
  return f;
}

Integrand make_f2(int s, double w) {
  if (s < 1 || w <= 0.0) throw std::invalid_argument("make_f2: need s >= 1, w > 0");
  std::vector<double> wj(s);
  for (int j = 1; j <= s; ++j) wj[j - 1] = std::pow(w, j);
  Integrand f;
  f.name = "f2";
  f.s = s;
  f.param = w;
  f.exact = 1.0;  // the polynomial factor integrates to zero
  f.eval = [wj = std::move(wj)](std::span<const double> x) {
    double v = 1.0;
    for (std::size_t j = 0; j < wj.size(); ++j) {
      double t = x[j], t2 = t * t;
      double poly = -10.0 + 42.0 * t2 - 42.0 * t2 * t2 * t + 21.0 * t2 * t2 * t2;
      v *= 1.0 + wj[j] / 21.0 * poly;
    }
    return v;
  };
  return f;
}

Integrand make_f3(int s, double w) {
  if (s < 1 || w <= 0.0) throw std::invalid_argument("make_f3: need s >= 1, w > 0");
  std::vector<double> wj(s);
  for (int j = 1; j <= s; ++j) wj[j - 1] = std::pow(w, j);
  const double c16 = 16.0 * std::cos(1.0);
  Integrand f;
  f.name = "f3";
  f.s = s;
  f.param = w;
  f.exact = 1.0;  // polynomial part gives 16, the cos/sin part removes it
  f.eval = [wj = std::move(wj), c16](std::span<const double> x) {
    double v = 1.0;
    for (std::size_t j = 0; j < wj.size(); ++j) {
      double t = x[j], t2 = t * t, t3 = t2 * t;
      double poly = 31.0 - 84.0 * t2 + 8.0 * t3 + 70.0 * t2 * t2 -
                    28.0 * t3 * t3 + 8.0 * t3 * t3 * t;
      v *= 1.0 + wj[j] / 8.0 * (poly - c16 - 16.0 * std::sin(t));
    }
    return v;
  };
  return f;
}

Integrand make_integrand(const std::string& name, int s, double param) {
  if (name == "f1") return make_f1(s, param);
  if (name == "f2") return make_f2(s, param);
  if (name == "f3") return make_f3(s, param);
  throw std::invalid_argument("make_integrand: unknown integrand " + name);
}

double integrate(const Integrand& f, std::span<const double> points) {
  if (f.s < 1 || points.size() % f.s != 0)
    throw std::invalid_argument("integrate: point dimension mismatch");
  const std::size_t count = points.size() / f.s;
  if (count == 0) throw std::invalid_argument("integrate: empty point set");
  KahanAccumulator acc;
  for (std::size_t n = 0; n < count; ++n)
    acc.add(f.eval(points.subspan(n * f.s, f.s)));
  return acc.value() / double(count);
}

}  // namespace qmcipl
