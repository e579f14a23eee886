#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "qmcipl/lattice.hpp"
#include "qmcipl/util.hpp"

using namespace qmcipl;

namespace {

RuleSpec small_spec(uint32_t b, int m, int s, int d, std::vector<uint64_t> q_encs,
                    double r = 1.0) {
  RuleSpec spec;
  spec.b = b;
  spec.m = m;
  spec.s = s;
  spec.d = d;
  spec.p = smallest_irreducible(b, m);
  for (uint64_t e : q_encs) spec.q.push_back(GFPolynomial::from_encoding(b, e));
  spec.weights = WeightProfile::power_decay(b, r, s);
  return spec;
}

GFPolynomial rand_modulus(uint32_t b, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> pick(ipow(b, m), ipow(b, m + 1) - 1);
  return GFPolynomial::from_encoding(b, pick(rng));
}

}  // namespace

TEST_CASE("lattice_point: examples") {
  GFPolynomial p{2, {1, 1, 1}};  // x^2+x+1
  std::vector<GFPolynomial> q{GFPolynomial::one(2)};

  auto origin = lattice_point(p, q, 0);
  CHECK(origin[0].value() == 0.0);

  auto pt = lattice_point(p, q, 1);
  CHECK(pt[0].digits == std::vector<uint8_t>{0, 1});  // 1/p = x^-2 + x^-3 + ...
  CHECK(pt[0].value() == 0.25);

  CHECK_THROWS_AS(lattice_point(p, q, 4), std::invalid_argument);
}

TEST_CASE("lattice_point: n -> point injective for q = (1)") {
  for (int m = 1; m <= 6; ++m) {
    GFPolynomial p = smallest_irreducible(2, m);
    std::vector<GFPolynomial> q{GFPolynomial::one(2)};
    std::set<std::vector<uint8_t>> seen;
    for (uint64_t n = 0; n < ipow(2, m); ++n)
      CHECK(seen.insert(lattice_point(p, q, n)[0].digits).second);
  }
}

TEST_CASE("generate_point_set: interlaced example") {
  RuleSpec spec = small_spec(2, 2, 1, 2, {1, 1});
  PointSet ps = generate_point_set(spec);
  REQUIRE(ps.size() == 4);
  CHECK(ps.point(0)[0].value() == 0.0);
  CHECK(ps.point(1)[0].value() == 0.1875);
  CHECK(ps.point(2)[0].value() == 0.9375);
  CHECK(ps.point(3)[0].value() == 0.75);
  for (uint64_t n = 0; n < 4; ++n)
    CHECK(ps.point(n)[0].precision() == spec.point_digits());
}

TEST_CASE("generate_point_set: d = 1 leaves plain lattice points") {
  RuleSpec spec = small_spec(2, 3, 2, 1, {1, 5});
  PointSet ps = generate_point_set(spec);
  for (uint64_t n = 0; n < ps.size(); ++n) {
    auto raw = lattice_point(spec.p, spec.q, n);
    for (int j = 0; j < spec.s; ++j)
      CHECK(ps.point(n)[j].digits == raw[j].digits);
  }
}

TEST_CASE("in_dual: examples") {
  GFPolynomial p = smallest_irreducible(2, 3);
  std::vector<GFPolynomial> q{GFPolynomial::one(2)};
  std::vector<uint64_t> zero{0};
  CHECK(in_dual(p, q, zero));
  std::vector<uint64_t> bm{8};  // b^m; tr_m drops it
  CHECK(in_dual(p, q, bm));
  std::vector<uint64_t> one{1};
  CHECK_FALSE(in_dual(p, q, one));
  std::vector<uint64_t> two{1, 2};
  CHECK_THROWS_AS(in_dual(p, q, two), std::invalid_argument);
}

TEST_CASE("character sums match the dual indicator (plain and interlaced)") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 60; ++rep) {
    uint32_t b = (rep % 2 == 0) ? 2 : 3;
    int m = 1 + int(rng() % (b == 2 ? 6 : 4));
    int d = 1 + int(rng() % 2);
    int s = 1 + int(rng() % 2);
    const uint64_t n_points = ipow(b, m);

    GFPolynomial p = rand_modulus(b, m, rng);
    std::vector<GFPolynomial> q;
    std::vector<uint64_t> k(d * s);
    std::uniform_int_distribution<uint64_t> qpick(1, n_points - 1);
    std::uniform_int_distribution<uint64_t> kpick(0, n_points - 1);
    for (int c = 0; c < d * s; ++c) {
      q.push_back(GFPolynomial::from_encoding(b, qpick(rng)));
      k[c] = kpick(rng);
    }

    double indicator = in_dual(p, q, k) ? 1.0 : 0.0;

    std::complex<double> plain{0.0, 0.0};
    std::complex<double> interlaced{0.0, 0.0};
    std::vector<uint64_t> ek = interlace_int_blocks(d, s, k, b);
    for (uint64_t n = 0; n < n_points; ++n) {
      auto raw = lattice_point(p, q, n);
      plain += walsh_multi(b, k, raw);
      auto y = interlace_point_blocks(d, s, raw);
      interlaced += walsh_multi(b, ek, y);
    }
    CHECK(std::abs(plain / double(n_points) - indicator) < 1e-9);
    CHECK(std::abs(interlaced / double(n_points) - indicator) < 1e-9);
  }
}

TEST_CASE("point digits: exact count and binary64 round trip") {
  RuleSpec spec = small_spec(2, 5, 2, 2, {1, 5, 9, 30});
  PointSet ps = generate_point_set(spec);
  for (uint64_t n = 0; n < ps.size(); ++n) {
    for (int j = 0; j < spec.s; ++j) {
      const DigitVector& c = ps.point(n)[j];
      REQUIRE(c.precision() == spec.d * spec.m);
      DigitVector back = digit_vector_from_value(2, c.value(), c.precision());
      CHECK(back.digits == c.digits);
    }
  }
}

TEST_CASE("RuleSpec validation") {
  RuleSpec good = small_spec(2, 3, 1, 2, {1, 3});
  CHECK_NOTHROW(good.validate());

  RuleSpec wrong_count = good;
  wrong_count.q.pop_back();
  CHECK_THROWS_AS(wrong_count.validate(), std::invalid_argument);

  RuleSpec zero_q = good;
  zero_q.q[1] = GFPolynomial::zero(2);
  CHECK_THROWS_AS(zero_q.validate(), std::invalid_argument);

  RuleSpec reducible = good;
  reducible.p = GFPolynomial::monomial(2, 3);  // x^3
  CHECK_THROWS_AS(reducible.validate(), std::invalid_argument);

  RuleSpec big_q = good;
  big_q.q[0] = GFPolynomial::from_encoding(2, 9);  // degree 3 = m
  CHECK_THROWS_AS(big_q.validate(), std::invalid_argument);
}

TEST_CASE("write_point_set: header and row count") {
  RuleSpec spec = small_spec(2, 2, 1, 2, {1, 1});
  PointSet ps = generate_point_set(spec);
  std::ostringstream os;
  write_point_set(os, ps);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  CHECK(header == "# 2 2 1 2 4");
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 4);
}
