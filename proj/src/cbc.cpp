#include "qmcipl/cbc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qmcipl/convolver.hpp"
#include "qmcipl/criterion.hpp"
#include "qmcipl/util.hpp"

namespace qmcipl {

int choose_interlacing(int m, double r) {
  if (m < 1) throw std::invalid_argument("choose_interlacing: m must be >= 1");
  if (r <= 0.0) throw std::invalid_argument("choose_interlacing: r must be > 0");
  double t = std::pow(double(m), r / (r + 1.0));
  double snapped = std::round(t);
  if (std::abs(t - snapped) < 1e-9) t = snapped;
  return static_cast<int>(std::ceil(t));
}

namespace {

enum class Mode { kNaive, kFast };

// Candidates are compared on the criterion value itself. Within the tie
// width (relative, floored near the binary64 resolution of a -1 + mean
// expression) the smaller integer encoding wins, identically in both modes.
double tie_width(double b_u_x, double b_u_y) {
  // Relative tie band on the criterion, floored near the resolution of the
  // extended-precision accumulation.
  return std::max(1e-12 * std::max(std::abs(b_u_x), std::abs(b_u_y)), 1e-17);
}

bool strictly_better(double b_u_x, double b_u_best) {
  return b_u_x < b_u_best - tie_width(b_u_x, b_u_best);
}

struct SlotScorer {
  // Per-slot criterion of candidate q: B_u is -1 plus the mean of
  // rho[n] * psi(x_{n,tau}) over the point set. Both construction modes rank
  // candidates with this exact sum, in the same order, so selections cannot
  // drift apart.
  const std::vector<long double>& rho;
  const std::vector<long double>& psi_col;  // indexed by residue encoding
  const std::vector<uint32_t>& pow_enc;     // g^t -> encoding
  const std::vector<uint32_t>& log_enc;     // encoding -> t
  uint64_t group_order;
  long double zero_term = 0.0L;             // rho[0] * psi(0)

  long double sum(uint64_t q_enc) const {
    const uint64_t tq = log_enc[q_enc];
    LongKahanAccumulator acc;
    for (uint64_t n = 1; n < rho.size(); ++n) {
      uint64_t idx = log_enc[n] + tq;
      if (idx >= group_order) idx -= group_order;
      acc.add(rho[n] * psi_col[pow_enc[idx]]);
    }
    return acc.value();
  }
  double criterion(uint64_t q_enc) const {
    return static_cast<double>(
        -1.0L + (zero_term + sum(q_enc)) / static_cast<long double>(rho.size()));
  }
};

// psi column over all nonzero residues: psi_col[w] = psi(v_m(w/p)). The b = 2
// kernel peels Laurent digits with shift/xor word operations, O(m) each.
void build_psi_column(std::vector<long double>& psi_col, const PsiTable& table,
                      const GFPolynomial& p, uint32_t b, int m) {
  const uint64_t n_points = psi_col.size();
  if (b == 2) {
    const uint64_t pmask = p.encoding();
    const uint64_t low = n_points - 1;
    for (uint64_t w = 1; w < n_points; ++w) {
      uint64_t r = w;
      long double v = 1.0L;
      for (int i = 0; i < m; ++i) {
        uint64_t t = (r >> (m - 1)) & 1;
        r = ((r << 1) ^ (t ? pmask : 0)) & low;
        v *= table.factor(i, static_cast<uint8_t>(t));
      }
      psi_col[w] = v;
    }
    return;
  }
  const uint32_t lead_inv = [&] {
    uint32_t lead = p.coeffs().back(), acc = 1, t = lead;
    for (uint32_t e = b - 2; e != 0; e >>= 1) {
      if (e & 1) acc = acc * t % b;
      t = t * t % b;
    }
    return acc;
  }();
  std::vector<uint8_t> r(m);
  for (uint64_t w = 1; w < n_points; ++w) {
    uint64_t enc = w;
    for (int i = 0; i < m; ++i) {
      r[i] = static_cast<uint8_t>(enc % b);
      enc /= b;
    }
    long double v = 1.0L;
    for (int l = 0; l < m; ++l) {
      uint32_t t = r[m - 1] * lead_inv % b;
      for (int i = m - 1; i >= 1; --i)
        r[i] = static_cast<uint8_t>((r[i - 1] + b * b - t * p.coeff(i) % b) % b);
      r[0] = static_cast<uint8_t>((b * b - t * p.coeff(0) % b) % b);
      v *= table.factor(l, static_cast<uint8_t>(t));
    }
    psi_col[w] = v;
  }
}

CbcResult construct(uint32_t b, int m, int s, int d,
                    const WeightProfile& weights_in, Mode mode,
                    double naive_op_limit) {
  if (!is_prime(b)) throw std::invalid_argument("cbc: b must be prime");
  if (m < 1 || s < 1 || d < 1)
    throw std::invalid_argument("cbc: m, s, d must be >= 1");
  if (double(m) * std::log2(double(b)) > 22.0)
    throw SizeGuardError("cbc: construction tables for b^m points exceed the desk-scale limit");
  const uint64_t n_points = ipow(b, static_cast<unsigned>(m));
  const uint64_t group_order = n_points - 1;
  const int components = d * s;
  if (mode == Mode::kNaive) {
    double ops = double(group_order) * double(group_order) * components;
    if (ops > naive_op_limit)
      throw SizeGuardError("cbc_construct_naive: b^{2m} sweep above the op limit");
  }

  const WeightProfile weights = weights_in.base() == b && weights_in.size() >= s
                                    ? weights_in
                                    : weights_in.resized(s);
  if (weights.base() != b)
    throw std::invalid_argument("cbc: weight profile base mismatch");

  CbcResult result;
  const GFPolynomial p = smallest_irreducible(b, m);
  const GFPolynomial g = find_primitive(p);

  // Discrete log/exp tables for the cyclic group of nonzero residues mod p.
  std::vector<uint32_t> pow_enc(group_order);
  std::vector<uint32_t> log_enc(n_points, 0);
  {
    GFPolynomial t = GFPolynomial::one(b);
    for (uint64_t i = 0; i < group_order; ++i) {
      uint32_t enc = static_cast<uint32_t>(t.encoding());
      pow_enc[i] = enc;
      log_enc[enc] = static_cast<uint32_t>(i);
      t = mulmod(t, g, p);
    }
  }

  std::vector<long double> rho(n_points, 1.0L);
  std::vector<long double> psi_col(n_points, 0.0L);
  std::vector<GFPolynomial> q;
  q.reserve(components);

  CirculantPlan plan(mode == Mode::kFast && group_order > 0 ? group_order : 1);
  std::vector<double> col, rho_perm, conv_out;
  if (mode == Mode::kFast) {
    col.resize(group_order);
    rho_perm.resize(group_order);
    conv_out.resize(group_order);
  }

  std::size_t live_values = 2 * rho.size() + 2 * psi_col.size() +
                            pow_enc.size() / 2 + log_enc.size() / 2 +
                            col.size() + rho_perm.size() + conv_out.size() +
                            plan.workspace_values();
  result.stats.peak_values = std::max(result.stats.peak_values, live_values);

  SlotScorer scorer{rho, psi_col, pow_enc, log_enc, group_order, 0.0};

  for (int tau = 1; tau <= components; ++tau) {
    auto t_start = std::chrono::steady_clock::now();
    const int beta = (tau + d - 1) / d;
    const int gamma = tau - d * (beta - 1);
    const PsiTable table =
        PsiTable::build(b, m, d, gamma, weights.exponent(beta));

    build_psi_column(psi_col, table, p, b, m);
    const long double psi_zero = table.value_zero();
    scorer.zero_term = rho[0] * psi_zero;

    uint64_t chosen;
    if (tau == 1) {
      chosen = 1;  // q_1 = 1
    } else if (mode == Mode::kNaive) {
      uint64_t best_enc = 1;
      double best = scorer.criterion(1);
      for (uint64_t q_enc = 2; q_enc < n_points; ++q_enc) {
        double v = scorer.criterion(q_enc);
        if (strictly_better(v, best)) {
          best = v;
          best_enc = q_enc;
        }
      }
      chosen = best_enc;
    } else {
      double max_col = 0.0, sum_abs_rho = 0.0;
      for (uint64_t t = 0; t < group_order; ++t) {
        col[t] = static_cast<double>(psi_col[pow_enc[t]]);
        double r = static_cast<double>(rho[pow_enc[(group_order - t) % group_order]]);
        rho_perm[t] = r;
        max_col = std::max(max_col, std::abs(col[t]));
        sum_abs_rho += std::abs(r);
      }
      plan.multiply(col, rho_perm, conv_out);

      // Scan candidates in order of the approximate scores and rescore them
      // exactly; past the FFT error band plus the tie band nothing can win
      // or tie anymore. The error bound carries a ~100x margin over the
      // observed round-off of the convolution (and of the casts feeding it).
      const double fft_err_bu =
          16.0 * 2.3e-16 *
          std::log2(double(std::max(plan.padded_length(), group_order) + 1)) *
          max_col * sum_abs_rho / double(n_points);
      std::vector<uint32_t> order(group_order);
      for (uint64_t i = 0; i < group_order; ++i) order[i] = uint32_t(i);
      std::sort(order.begin(), order.end(), [&](uint32_t a2, uint32_t b2) {
        return conv_out[a2] < conv_out[b2];
      });

      std::vector<std::pair<uint64_t, double>> scored;
      double best_seen = 0.0;
      for (uint32_t i : order) {
        double bu_apx = static_cast<double>(
            -1.0L + (scorer.zero_term + conv_out[i]) / static_cast<long double>(n_points));
        if (!scored.empty() &&
            bu_apx - fft_err_bu > best_seen + tie_width(bu_apx, best_seen))
          break;
        double v = scorer.criterion(pow_enc[i]);
        if (scored.empty() || v < best_seen) best_seen = v;
        scored.emplace_back(pow_enc[i], v);
      }
      std::sort(scored.begin(), scored.end());

      uint64_t best_enc = scored.front().first;
      double best = scored.front().second;
      for (std::size_t i = 1; i < scored.size(); ++i) {
        if (strictly_better(scored[i].second, best)) {
          best = scored[i].second;
          best_enc = scored[i].first;
        }
      }
      chosen = best_enc;
    }

    const double step_b_u = scorer.criterion(chosen);

    rho[0] *= psi_zero;
    const uint64_t t_chosen = log_enc[chosen];
    for (uint64_t n = 1; n < n_points; ++n) {
      uint64_t idx = log_enc[n] + t_chosen;
      if (idx >= group_order) idx -= group_order;
      rho[n] *= psi_col[pow_enc[idx]];
    }
    q.push_back(GFPolynomial::from_encoding(b, chosen));

    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t_start)
                      .count();
    result.trace.push_back(CbcStep{tau, chosen, step_b_u, secs});
  }

  result.spec = RuleSpec{b, m, s, d, p, std::move(q), weights};
  result.spec.validate();
  return result;
}

}  // namespace

CbcResult cbc_construct_naive(uint32_t b, int m, int s, int d,
                              const WeightProfile& weights,
                              double naive_op_limit) {
  return construct(b, m, s, d, weights, Mode::kNaive, naive_op_limit);
}

CbcResult cbc_construct_fast(uint32_t b, int m, int s, int d,
                             const WeightProfile& weights) {
  return construct(b, m, s, d, weights, Mode::kFast, 0.0);
}

}  // namespace qmcipl
