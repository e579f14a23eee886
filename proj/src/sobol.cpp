#include "qmcipl/sobol.hpp"

#include <stdexcept>

#include "qmcipl/util.hpp"

namespace qmcipl {

namespace {

// Joe-Kuo initialisation data, generated from data/sobol_joe_kuo.txt.
struct SobolRow {
  uint32_t s;
  uint32_t a;
  uint32_t m[18];
};

#include "sobol_table.inc"

constexpr int kBits = 32;

// 32-bit direction numbers v_1..v_kBits for one dimension (1-based).
std::vector<uint32_t> direction_numbers(int dim) {
  std::vector<uint32_t> v(kBits);
  if (dim == 1) {
    for (int i = 0; i < kBits; ++i) v[i] = 1u << (kBits - 1 - i);
    return v;
  }
  const SobolRow& row = kSobolRows[dim - 2];
  const uint32_t s = row.s;
  std::vector<uint32_t> m(kBits);
  for (uint32_t i = 0; i < s; ++i) m[i] = row.m[i];
  for (uint32_t i = s; i < kBits; ++i) {
    uint32_t val = m[i - s] ^ (m[i - s] << s);
    for (uint32_t k = 1; k < s; ++k) {
      if ((row.a >> (s - 1 - k)) & 1u) val ^= m[i - k] << k;
    }
    m[i] = val;
  }
  for (int i = 0; i < kBits; ++i) v[i] = m[i] << (kBits - 1 - i);
  return v;
}

}  // namespace

int sobol_max_dimension() { return kSobolRowCount + 1; }

std::vector<double> sobol_points(int s, int m) {
  if (s < 1 || s > sobol_max_dimension())
    throw SizeGuardError("sobol_points: dimension beyond the vendored table");
  if (m < 0 || m > 32)
    throw SizeGuardError("sobol_points: need 0 <= m <= 32");

  std::vector<std::vector<uint32_t>> v(s);
  for (int j = 0; j < s; ++j) v[j] = direction_numbers(j + 1);

  const uint64_t count = uint64_t{1} << m;
  std::vector<double> pts(count * s, 0.0);
  std::vector<uint32_t> state(s, 0);
  constexpr double scale = 1.0 / 4294967296.0;  // 2^-32
  for (uint64_t n = 0; n < count; ++n) {
    // x_n = xor of v_i over the set bits of n.
    uint64_t bits = n;
    for (int j = 0; j < s; ++j) state[j] = 0;
    int i = 0;
    while (bits != 0) {
      if (bits & 1) {
        for (int j = 0; j < s; ++j) state[j] ^= v[j][i];
      }
      bits >>= 1;
      ++i;
    }
    for (int j = 0; j < s; ++j) pts[n * s + j] = state[j] * scale;
  }
  return pts;
}

}  // namespace qmcipl
