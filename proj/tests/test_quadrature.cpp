#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qmcipl/cbc.hpp"
#include "qmcipl/lattice.hpp"
#include "qmcipl/quadrature.hpp"
#include "qmcipl/sobol.hpp"
#include "qmcipl/util.hpp"

using namespace qmcipl;
using namespace qmcipl::testing;

TEST_CASE("exact values match 1-D quadrature factor by factor") {
  // f1, s = 1, r = 1: 2(1 - e^{-1/2}).
  Integrand f1 = make_f1(1, 1.0);
  CHECK(close(f1.exact, 2.0 * (1.0 - std::exp(-0.5)), 1e-14));

  Integrand f1w = make_f1(3, 0.5);
  double prod = 1.0;
  for (int j = 1; j <= 3; ++j) {
    double c = std::exp2(-std::sqrt(double(j)));
    prod *= adaptive_simpson([c](double x) { return std::exp(-c * x); }, 0.0, 1.0);
  }
  CHECK(close(f1w.exact, prod, 1e-10));

  for (int j = 1; j <= 3; ++j) {
    double wj = std::pow(0.5, j);
    double factor2 = adaptive_simpson(
        [wj](double x) {
          double x2 = x * x;
          return 1.0 + wj / 21.0 *
                           (-10.0 + 42.0 * x2 - 42.0 * x2 * x2 * x + 21.0 * x2 * x2 * x2);
        },
        0.0, 1.0);
    CHECK(close(factor2, 1.0, 1e-10));
    double factor3 = adaptive_simpson(
        [wj](double x) {
          double x2 = x * x, x3 = x2 * x;
          return 1.0 + wj / 8.0 *
                           (31.0 - 84.0 * x2 + 8.0 * x3 + 70.0 * x2 * x2 -
                            28.0 * x3 * x3 + 8.0 * x3 * x3 * x - 16.0 * std::cos(1.0) -
                            16.0 * std::sin(x));
        },
        0.0, 1.0);
    CHECK(close(factor3, 1.0, 1e-10));
  }
  CHECK(make_f2(4, 0.5).exact == 1.0);
  CHECK(make_f3(4, 0.5).exact == 1.0);
  CHECK_THROWS_AS(make_integrand("f9", 2, 0.5), std::invalid_argument);
}

TEST_CASE("integrate: constant function is exact") {
  Integrand one;
  one.name = "one";
  one.s = 3;
  one.exact = 1.0;
  one.eval = [](std::span<const double>) { return 1.0; };
  std::vector<double> pts = sobol_points(3, 5);
  CHECK(integrate(one, pts) == 1.0);
  std::vector<double> bad(10, 0.0);
  CHECK_THROWS_AS(integrate(one, bad), std::invalid_argument);
}

TEST_CASE("integrate: Walsh functions probe the dual lattice") {
  WeightProfile w = WeightProfile::power_decay(2, 1.0, 2);
  CbcResult res = cbc_construct_fast(2, 5, 2, 1, w);
  PointSet ps = generate_point_set(res.spec);
  std::vector<double> flat = ps.to_doubles();

  auto walsh_mean = [&](std::vector<uint64_t> k) {
    Integrand probe;
    probe.s = 2;
    probe.eval = [k](std::span<const double> x) {
      double v = 1.0;
      for (std::size_t j = 0; j < k.size(); ++j) {
        DigitVector d = digit_vector_from_value(2, x[j], 40);
        v *= walsh(2, k[j], d).real();
      }
      return v;
    };
    return integrate(probe, flat);
  };

  // k in the dual (scaled by b^m per component) integrates to 1...
  CHECK(close(walsh_mean({32, 0}), 1.0, 1e-9));
  // ...and any nonzero k below b^m outside the dual integrates to 0.
  std::vector<GFPolynomial> q = res.spec.q;
  for (uint64_t k1 = 1; k1 < 8; ++k1) {
    std::vector<uint64_t> k{k1, k1 / 2};
    if (in_dual(res.spec.p, q, k)) continue;
    CHECK(std::abs(walsh_mean({k1, k1 / 2})) < 1e-9);
  }
}

TEST_CASE("sobol: first dimension is van der Corput") {
  std::vector<double> pts = sobol_points(1, 3);
  std::vector<double> expect{0.0, 0.5, 0.25, 0.75, 0.125, 0.625, 0.375, 0.875};
  REQUIRE(pts.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(pts[i] == expect[i]);
}

TEST_CASE("sobol: frozen reference points (Joe-Kuo table)") {
  // First natural-order points at s = 5, checked against an independent
  // generator built on the published table.
  std::vector<double> pts = sobol_points(5, 4);
  REQUIRE(pts.size() == 16 * 5);
  const double expect1[5] = {0.5, 0.5, 0.5, 0.5, 0.5};
  const double expect2[5] = {0.25, 0.75, 0.75, 0.75, 0.25};
  const double expect3[5] = {0.75, 0.25, 0.25, 0.25, 0.75};
  for (int j = 0; j < 5; ++j) {
    CHECK(pts[0 * 5 + j] == 0.0);
    CHECK(pts[1 * 5 + j] == expect1[j]);
    CHECK(pts[2 * 5 + j] == expect2[j]);
    CHECK(pts[3 * 5 + j] == expect3[j]);
  }

  // Sorted-set anchors of the same block.
  std::vector<std::vector<double>> rows;
  for (int n = 0; n < 16; ++n)
    rows.emplace_back(pts.begin() + n * 5, pts.begin() + (n + 1) * 5);
  std::sort(rows.begin(), rows.end());
  CHECK(rows[0] == std::vector<double>{0.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(rows[7] == std::vector<double>{0.4375, 0.5625, 0.1875, 0.6875, 0.8125});
  CHECK(rows[15] == std::vector<double>{0.9375, 0.0625, 0.6875, 0.1875, 0.3125});
}

TEST_CASE("sobol: capacity limits and determinism") {
  CHECK(sobol_max_dimension() >= 64);
  CHECK_THROWS_AS(sobol_points(sobol_max_dimension() + 1, 3), SizeGuardError);
  CHECK_THROWS_AS(sobol_points(2, 40), SizeGuardError);
  CHECK(sobol_points(8, 6) == sobol_points(8, 6));
}
