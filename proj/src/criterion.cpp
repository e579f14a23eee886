#include "qmcipl/criterion.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmcipl/util.hpp"

namespace qmcipl {

double psi(double a, int h, int m, int d, const DigitVector& x) {
  if (d < 1 || h < 1 || h > d) throw std::invalid_argument("psi: need 1 <= h <= d");
  if (x.precision() < m) throw std::invalid_argument("psi: x carries fewer than m digits");
  const uint32_t b = x.base;
  double v = 1.0;
  for (int i = 1; i <= m; ++i) {
    double w = std::pow(double(b), -(double(d) * (i - 1) + h + a));
    double eta = x.digits[i - 1] == 0 ? double(b - 1) : -1.0;
    v *= 1.0 + eta * w;
  }
  return v;
}

PsiTable PsiTable::build(uint32_t b, int m, int d, int h, double a) {
  PsiTable t;
  t.b_ = b;
  t.m_ = m;
  t.factors_.resize(static_cast<std::size_t>(m) * b);
  t.zero_value_ = 1.0L;
  for (int i = 1; i <= m; ++i) {
    long double w =
        std::pow(static_cast<long double>(b),
                 -(static_cast<long double>(d) * (i - 1) + h + static_cast<long double>(a)));
    t.factors_[(i - 1) * b] = 1.0L + (b - 1) * w;
    for (uint32_t digit = 1; digit < b; ++digit)
      t.factors_[(i - 1) * b + digit] = 1.0L - w;
    t.zero_value_ *= 1.0L + (b - 1) * w;
  }
  return t;
}

namespace {

// Slot (j,h) of interlaced component c in 1..d*s: j = ceil(c/d).
std::vector<PsiTable> slot_tables(const RuleSpec& spec, int tau) {
  std::vector<PsiTable> tables;
  tables.reserve(tau);
  for (int c = 1; c <= tau; ++c) {
    int j = (c + spec.d - 1) / spec.d;
    int h = c - spec.d * (j - 1);
    tables.push_back(
        PsiTable::build(spec.b, spec.m, spec.d, h, spec.weights.exponent(j)));
  }
  return tables;
}

}  // namespace

double b_u(const RuleSpec& spec, std::optional<int> tau_opt) {
  spec.validate();
  const int tau = tau_opt.value_or(spec.components());
  if (tau < 1 || tau > spec.components())
    throw std::invalid_argument("b_u: tau out of range");
  const auto tables = slot_tables(spec, tau);
  const uint64_t n_points = spec.point_count();
  GFPolynomial npoly = GFPolynomial::zero(spec.b);

  LongKahanAccumulator acc;
  std::span<const GFPolynomial> qs(spec.q.data(), tau);
  for (uint64_t n = 0; n < n_points; ++n) {
    npoly = GFPolynomial::from_encoding(spec.b, n);
    long double prod = 1.0L;
    for (int c = 0; c < tau; ++c) {
      GFPolynomial w = mulmod(npoly, qs[c], spec.p);
      prod *= tables[c].value(laurent_digits(w, spec.p, spec.m));
    }
    acc.add(prod);
  }
  return static_cast<double>(-1.0L + acc.value() / static_cast<long double>(n_points));
}

double c_u_minus_one(const RuleSpec& spec) {
  spec.validate();
  const double b = spec.b;
  const double ratio = std::pow(b, -double(spec.d));
  double total = 0.0;  // running product minus one
  for (int j = 1; j <= spec.s; ++j) {
    const double aj = spec.weights.exponent(j);
    for (int h = 1; h <= spec.d; ++h) {
      double t = 0.0;
      for (int i = spec.m + 1;; ++i) {
        double x = (b - 1.0) * std::pow(b, -(double(spec.d) * (i - 1) + h + aj));
        t += x + t * x;
        // Tail of the factor sum is bounded by x * ratio / (1 - ratio).
        double tail = x * ratio / (1.0 - ratio);
        if (x == 0.0 || tail <= 1e-18 * std::max(t, DBL_MIN)) break;
      }
      total += t + total * t;
    }
  }
  return total;
}

double c_u(const RuleSpec& spec) { return 1.0 + c_u_minus_one(spec); }

CriterionValue wce_bound(const RuleSpec& spec) {
  CriterionValue v;
  v.b_u = b_u(spec);
  v.c_u_minus_one = c_u_minus_one(spec);
  return v;
}

namespace {

struct PhiShape {
  double knot;        // branch switch point
  double knot_value;  // phi(knot)
  double slope;       // linear branch slope (tangent at the knot)
};

PhiShape phi_shape(double lambda, uint32_t b) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw std::invalid_argument("phi: lambda must lie in (0,1]");
  if (b < 2) throw std::invalid_argument("phi: base must be >= 2");
  if (b >= 3) return {1.0 / b, 1.0 / b, lambda};
  // b = 2: the power branch is concave only up to
  // x~ = 2^{-(log2 e)^{1/lambda}}, where its value is 1/e; continue with the
  // tangent there so the whole map stays concave and C^1.
  const double log2e = 1.0 / std::numbers::ln2;
  double y = std::pow(log2e, 1.0 / lambda);  // log2(1/knot)
  double knot = std::exp2(-y);
  double slope = lambda * std::pow(y, lambda - 1.0) / (std::numbers::e * knot);
  return {knot, 1.0 / std::numbers::e, slope};
}

}  // namespace

double phi(double x, double lambda, uint32_t b) {
  PhiShape sh = phi_shape(lambda, b);
  if (x < 0.0) throw std::invalid_argument("phi: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (x < sh.knot) {
    double y = std::log(1.0 / x) / std::log(double(b));  // log_b(1/x)
    return std::pow(double(b), -std::pow(y, lambda));
  }
  return sh.slope * (x - sh.knot) + sh.knot_value;
}

double phi_inverse(double y, double lambda, uint32_t b) {
  PhiShape sh = phi_shape(lambda, b);
  if (y < 0.0) throw std::invalid_argument("phi_inverse: y must be >= 0");
  if (y == 0.0) return 0.0;
  if (y < sh.knot_value) {
    double t = std::log(1.0 / y) / std::log(double(b));  // log_b(1/y)
    return std::pow(double(b), -std::pow(t, 1.0 / lambda));
  }
  return (y - sh.knot_value) / sh.slope + sh.knot;
}

namespace {

struct MuLevel {
  std::vector<double> values;        // distinct mu values, ascending
  std::vector<double> counts;        // multiplicity of each value
  std::vector<double> suffix_count;  // combinations at or after each value
};

MuLevel mu_level(double a, uint32_t b, uint64_t side) {
  std::vector<double> mus(side);
  for (uint64_t k = 0; k < side; ++k) mus[k] = mu(a, k, b);
  std::sort(mus.begin(), mus.end());
  MuLevel lvl;
  for (double v : mus) {
    if (!lvl.values.empty() && v == lvl.values.back()) {
      lvl.counts.back() += 1.0;
    } else {
      lvl.values.push_back(v);
      lvl.counts.push_back(1.0);
    }
  }
  lvl.suffix_count.resize(lvl.values.size() + 1, 0.0);
  for (std::size_t i = lvl.values.size(); i-- > 0;)
    lvl.suffix_count[i] = lvl.suffix_count[i + 1] + lvl.counts[i];
  return lvl;
}

}  // namespace

double theorem2_bound(const WeightProfile& weights, uint32_t b, int m, int d,
                      int s, double lambda) {
  if (m < 1 || d < 1 || s < 1)
    throw std::invalid_argument("theorem2_bound: m, d, s must be >= 1");
  if (weights.size() < s)
    throw std::invalid_argument("theorem2_bound: weight profile too short");
  phi_shape(lambda, b);  // validates lambda
  const double side_log2 = double(d) * m * std::log2(double(b));
  if (s > 4 || side_log2 > 16.0)
    throw SizeGuardError("theorem2_bound: supports s <= 4 and b^{dm} <= 65536");
  const uint64_t side = ipow(b, static_cast<unsigned>(d * m));

  std::vector<MuLevel> levels;
  levels.reserve(s);
  for (int j = 1; j <= s; ++j)
    levels.push_back(mu_level(weights.exponent(j), b, side));

  // Combinations contributed by levels past j, for the tail bound, and the
  // least mu those levels can add (0 unless a profile drives mu negative).
  std::vector<double> grid_after(s, 1.0);
  std::vector<double> min_add_after(s, 0.0);
  for (int j = s - 2; j >= 0; --j) {
    grid_after[j] = grid_after[j + 1] * double(side);
    min_add_after[j] =
        min_add_after[j + 1] + std::min(0.0, levels[j + 1].values.front());
  }

  KahanAccumulator total;
  constexpr double kCutoff = 1e-18;

  // Depth-first sweep over the per-coordinate mu lists in ascending order;
  // a subtree is dropped once even its largest term times its cardinality
  // cannot move the running sum at the cutoff level.
  auto sweep = [&](auto&& self, int j, double mu_acc, double mult) -> void {
    const MuLevel& lvl = levels[j];
    for (std::size_t i = 0; i < lvl.values.size(); ++i) {
      double term_bound =
          phi(std::pow(double(b), -(mu_acc + lvl.values[i] + min_add_after[j])),
              lambda, b);
      double subtree = mult * lvl.suffix_count[i] * grid_after[j];
      if (total.value() > 0.0 && term_bound * subtree < kCutoff * total.value())
        break;
      if (j == s - 1) {
        total.add(mult * lvl.counts[i] * term_bound);
      } else {
        self(self, j + 1, mu_acc + lvl.values[i], mult * lvl.counts[i]);
      }
    }
  };
  sweep(sweep, 0, 0.0, 1.0);

  double sum_nonzero = total.value() - phi(1.0, lambda, b);  // drop k = 0
  double denom = double(ipow(b, static_cast<unsigned>(m)) - 1);
  return phi_inverse(sum_nonzero / denom, lambda, b);
}

}  // namespace qmcipl
