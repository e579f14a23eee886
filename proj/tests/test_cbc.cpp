#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qmcipl/cbc.hpp"
#include "qmcipl/criterion.hpp"
#include "qmcipl/util.hpp"

using namespace qmcipl;
using qmcipl::testing::close;

TEST_CASE("choose_interlacing") {
  CHECK(choose_interlacing(1, 0.5) == 1);
  CHECK(choose_interlacing(1, 3.0) == 1);
  CHECK(choose_interlacing(9, 1.0) == 3);
  CHECK(choose_interlacing(10, 1.0) == 4);
  CHECK(choose_interlacing(8, 2.0) == 4);
  CHECK_THROWS_AS(choose_interlacing(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(choose_interlacing(4, 0.0), std::invalid_argument);
}

TEST_CASE("cbc: first component is 1 with a null criterion") {
  for (uint32_t b : {2u, 3u}) {
    WeightProfile w = WeightProfile::power_decay(b, 1.0, 2);
    CbcResult res = cbc_construct_fast(b, 4, 2, 1, w);
    REQUIRE(res.trace.size() == 2);
    CHECK(res.trace[0].q_enc == 1);
    CHECK(res.spec.q[0] == GFPolynomial::one(b));
    CHECK(std::abs(res.trace[0].b_u) <= 1e-12);
  }
}

TEST_CASE("cbc: trace is non-decreasing in tau") {
  WeightProfile w = WeightProfile::power_decay(2, 0.5, 3);
  CbcResult res = cbc_construct_fast(2, 5, 3, 2, w);
  for (std::size_t i = 1; i < res.trace.size(); ++i)
    CHECK(res.trace[i].b_u >= res.trace[i - 1].b_u - 1e-12);
}

TEST_CASE("cbc: fast and naive agree exactly on selections") {
  for (int m : {4, 5, 6}) {
    for (int s : {1, 2, 3}) {
      for (int d : {1, 2}) {
        WeightProfile w = WeightProfile::power_decay(2, 1.0, s);
        CbcResult naive = cbc_construct_naive(2, m, s, d, w);
        CbcResult fast = cbc_construct_fast(2, m, s, d, w);
        REQUIRE(naive.trace.size() == fast.trace.size());
        for (std::size_t i = 0; i < naive.trace.size(); ++i) {
          CHECK(naive.trace[i].q_enc == fast.trace[i].q_enc);
          CHECK(close(naive.trace[i].b_u, fast.trace[i].b_u, 1e-10, 1e-13));
        }
      }
    }
  }
}

TEST_CASE("cbc: trace values reproduce a from-scratch criterion") {
  WeightProfile w = WeightProfile::power_decay(2, 1.0, 2);
  CbcResult res = cbc_construct_fast(2, 6, 2, 2, w);
  for (const CbcStep& step : res.trace) {
    double fresh = b_u(res.spec, step.tau);
    CHECK(std::abs(fresh - step.b_u) <= 1e-12 * std::max(1.0, std::abs(fresh)));
  }
}

TEST_CASE("cbc: s = 2, d = 1 reduction to an exhaustive search") {
  // With q_1 = 1 pinned, the tau = 2 step IS the exhaustive minimum.
  WeightProfile w = WeightProfile::power_decay(2, 1.0, 2);
  CbcResult res = cbc_construct_naive(2, 3, 2, 1, w);
  double best = 1e300;
  uint64_t best_q = 0;
  for (uint64_t q2 = 1; q2 < 8; ++q2) {
    RuleSpec spec;
    spec.b = 2;
    spec.m = 3;
    spec.s = 2;
    spec.d = 1;
    spec.p = smallest_irreducible(2, 3);
    spec.q = {GFPolynomial::one(2), GFPolynomial::from_encoding(2, q2)};
    spec.weights = w;
    double v = b_u(spec);
    if (v < best - 1e-12 * std::max(std::abs(v), std::abs(best))) {
      best = v;
      best_q = q2;
    }
  }
  CHECK(res.trace[1].q_enc == best_q);
  CHECK(close(res.trace[1].b_u, best, 1e-10, 1e-14));

  for (double lambda : {0.8, 0.9, 1.0})
    CHECK(res.trace[1].b_u <= theorem2_bound(w, 2, 3, 1, 2, lambda) * (1 + 1e-12));
}

TEST_CASE("cbc: constructed rules satisfy the theorem2 guarantee") {
  // Including interlaced cases at desk scale.
  for (int m : {3, 4, 5}) {
    for (int d : {1, 2}) {
      WeightProfile w = WeightProfile::power_decay(2, 1.0, 2);
      CbcResult res = cbc_construct_fast(2, m, 2, d, w);
      if (double(d) * m > 16) continue;
      for (double lambda : {0.8, 0.9, 1.0}) {
        double bound = theorem2_bound(w, 2, m, d, 2, lambda);
        CHECK(res.trace.back().b_u <= bound * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("cbc: size guards") {
  WeightProfile w = WeightProfile::power_decay(2, 1.0, 1);
  CHECK_THROWS_AS(cbc_construct_naive(2, 12, 1, 1, w, /*naive_op_limit=*/1e5),
                  SizeGuardError);
  CHECK_THROWS_AS(cbc_construct_fast(2, 23, 1, 1, w), SizeGuardError);
}

TEST_CASE("cbc: workspace accounting stays proportional to b^m") {
  WeightProfile w = WeightProfile::power_decay(2, 1.0, 2);
  CbcResult a = cbc_construct_fast(2, 8, 2, 1, w);
  CbcResult b = cbc_construct_fast(2, 11, 2, 1, w);
  double ra = double(a.stats.peak_values) / double(ipow(2, 8));
  double rb = double(b.stats.peak_values) / double(ipow(2, 11));
  CHECK(ra < 40.0);
  CHECK(rb < 40.0);
}
