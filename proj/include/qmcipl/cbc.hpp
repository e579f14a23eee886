#pragma once

#include <cstdint>
#include <vector>

#include "qmcipl/lattice.hpp"
#include "qmcipl/weights.hpp"

namespace qmcipl {

struct CbcStep {
  int tau = 0;
  uint64_t q_enc = 0;
  double b_u = 0.0;
  double seconds = 0.0;  // wall time spent selecting this component
};

struct WorkspaceStats {
  std::size_t peak_values = 0;  // most doubles live at once, beyond the spec
};

struct CbcResult {
  RuleSpec spec;
  std::vector<CbcStep> trace;
  WorkspaceStats stats;
};

/// Interlacing factor ceil(m^{r/(r+1)}) used when none is given explicitly.
int choose_interlacing(int m, double r);

/// Component-by-component search minimizing B_u over q in R_{b,m} per slot,
/// with p = smallest_irreducible(b, m) and q_1 = 1. Ties go to the smallest
/// integer encoding. The naive form scores every candidate by direct
/// summation, O(d*s*m*b^{2m}); work above naive_op_limit is refused.
CbcResult cbc_construct_naive(uint32_t b, int m, int s, int d,
                              const WeightProfile& weights,
                              double naive_op_limit = 1e11);

/// Same selections and trace as the naive form, but each slot locates the
/// minimizer through one circulant convolution over powers of a primitive
/// element, O(d*s*m*b^m) in total. Winning candidates are rescored by direct
/// summation so FFT round-off never reaches the reported trace.
CbcResult cbc_construct_fast(uint32_t b, int m, int s, int d,
                             const WeightProfile& weights);

}  // namespace qmcipl
