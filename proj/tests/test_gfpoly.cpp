#include <doctest.h>

#include <random>

#include "qmcipl/gfpoly.hpp"
#include "qmcipl/util.hpp"

using namespace qmcipl;

namespace {

GFPolynomial rand_poly(uint32_t b, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-1, max_deg);  // -1 for zero
  int d = deg(rng);
  if (d < 0) return GFPolynomial::zero(b);
  std::vector<uint8_t> c(d + 1);
  std::uniform_int_distribution<uint32_t> digit(0, b - 1);
  std::uniform_int_distribution<uint32_t> lead(1, b - 1);
  for (int i = 0; i < d; ++i) c[i] = static_cast<uint8_t>(digit(rng));
  c[d] = static_cast<uint8_t>(lead(rng));
  return {b, std::move(c)};
}

}  // namespace

TEST_CASE("add: examples") {
  GFPolynomial x1{2, {1, 1}};  // x+1
  CHECK(add(x1, x1).is_zero());

  GFPolynomial p = GFPolynomial::from_encoding(2, 19);
  CHECK(add(p, GFPolynomial::zero(2)) == p);

  GFPolynomial a{3, {2, 0, 1}};  // x^2+2
  GFPolynomial b{3, {1, 0, 2}};  // 2x^2+1
  CHECK(add(a, b).is_zero());

  CHECK_THROWS_AS(add(GFPolynomial::one(2), GFPolynomial::one(3)),
                  std::invalid_argument);
}

TEST_CASE("mulmod: examples") {
  GFPolynomial p{2, {1, 1, 1}};  // x^2+x+1
  GFPolynomial x = GFPolynomial::monomial(2, 1);
  CHECK(mulmod(x, x, p) == GFPolynomial{2, {1, 1}});  // x+1

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    GFPolynomial a = rand_poly(2, 6, rng);
    CHECK(mulmod(a, GFPolynomial::one(2), p) == mod(a, p));
    CHECK(mulmod(p, a, p).is_zero());
  }
  CHECK_THROWS_AS(mulmod(x, x, GFPolynomial::zero(2)), std::invalid_argument);
}

TEST_CASE("inner_product: examples") {
  GFPolynomial p = GFPolynomial::from_encoding(2, 19);
  std::vector<GFPolynomial> k{GFPolynomial::one(2)};
  std::vector<GFPolynomial> q{p};
  CHECK(inner_product(k, q) == p);

  std::vector<GFPolynomial> zeros(3, GFPolynomial::zero(2));
  std::vector<GFPolynomial> qs{p, p, GFPolynomial::one(2)};
  CHECK(inner_product(zeros, qs).is_zero());

  GFPolynomial x = GFPolynomial::monomial(2, 1);
  std::vector<GFPolynomial> k2{x, GFPolynomial::one(2)};
  std::vector<GFPolynomial> q2{GFPolynomial::one(2), x};
  CHECK(inner_product(k2, q2).is_zero());  // x + x over Z_2

  CHECK_THROWS_AS(inner_product(k2, q), std::invalid_argument);
}

TEST_CASE("is_irreducible: examples") {
  CHECK(is_irreducible(GFPolynomial{2, {1, 1, 1}}));
  CHECK_FALSE(is_irreducible(GFPolynomial::monomial(2, 2)));      // x^2
  CHECK_FALSE(is_irreducible(GFPolynomial{2, {1, 0, 1}}));        // (x+1)^2
  CHECK_THROWS_AS(is_irreducible(GFPolynomial::one(2)), std::invalid_argument);
}

TEST_CASE("smallest_irreducible: examples and property") {
  CHECK(smallest_irreducible(2, 1).encoding() == 2);    // x
  CHECK(smallest_irreducible(2, 2).encoding() == 7);    // x^2+x+1
  CHECK(smallest_irreducible(2, 3).encoding() == 11);   // x^3+x+1
  for (uint32_t b : {2u, 3u, 5u}) {
    for (int m = 1; m <= 10; ++m) {
      GFPolynomial p = smallest_irreducible(b, m);
      CHECK(p.degree() == m);
      CHECK(is_irreducible(p));
    }
  }
}

TEST_CASE("find_primitive: examples") {
  CHECK(find_primitive(GFPolynomial{2, {1, 1, 1}}).encoding() == 2);  // x
  CHECK(find_primitive(GFPolynomial::monomial(2, 1)).encoding() == 1);
  CHECK(find_primitive(GFPolynomial::from_encoding(2, 11)).encoding() == 2);
  CHECK_THROWS_AS(find_primitive(GFPolynomial::monomial(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(11);
  for (uint32_t b : {2u, 3u, 5u}) {
    GFPolynomial p = smallest_irreducible(b, 5);
    for (int i = 0; i < 60; ++i) {
      GFPolynomial a = rand_poly(b, 7, rng);
      GFPolynomial c = rand_poly(b, 7, rng);
      GFPolynomial e = rand_poly(b, 7, rng);
      CHECK(mulmod(a, c, p) == mulmod(c, a, p));
      CHECK(mulmod(mulmod(a, c, p), e, p) == mulmod(a, mulmod(c, e, p), p));
      CHECK(mod(mul(a, add(c, e)), p) ==
            mod(add(mul(a, c), mul(a, e)), p));
    }
  }
}

TEST_CASE("primitive powers enumerate the residue group exactly once") {
  struct Range { uint32_t b; int max_m; };
  for (auto [b, max_m] : {Range{2, 6}, Range{3, 4}, Range{5, 3}}) {
    for (int m = 1; m <= max_m; ++m) {
      uint64_t lo = ipow(b, m);
      for (uint64_t enc = lo; enc < lo * b; ++enc) {
        GFPolynomial p = GFPolynomial::from_encoding(b, enc);
        if (!is_irreducible(p)) continue;
        GFPolynomial g = find_primitive(p);
        std::vector<bool> seen(lo, false);
        GFPolynomial t = GFPolynomial::one(b);
        for (uint64_t n = 0; n + 1 < lo; ++n) {
          uint64_t e = t.encoding();
          REQUIRE(e < lo);
          REQUIRE_FALSE(seen[e]);
          seen[e] = true;
          t = mulmod(t, g, p);
        }
        CHECK(t == GFPolynomial::one(b));  // full cycle
      }
    }
  }
}

TEST_CASE("encoding round trip") {
  std::mt19937_64 rng(3);
  for (uint32_t b : {2u, 3u, 5u}) {
    for (int i = 0; i < 100; ++i) {
      GFPolynomial a = rand_poly(b, 9, rng);
      CHECK(GFPolynomial::from_encoding(b, a.encoding()) == a);
    }
  }
}
