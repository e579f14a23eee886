#include "qmcipl/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>

namespace qmcipl {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t f : {2ull, 3ull, 5ull}) {
    if (n == f) return true;
    if (n % f == 0) return false;
  }
  for (uint64_t f = 7; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

uint64_t ipow(uint64_t base, unsigned exp) {
  uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<uint64_t>::max() / base)
      throw std::overflow_error("ipow: result does not fit in 64 bits");
    r *= base;
  }
  return r;
}

double kahan_sum(std::span<const double> v) {
  KahanAccumulator acc;
  for (double x : v) acc.add(x);
  return acc.value();
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

int worker_count() {
  if (const char* env = std::getenv("QMC_IPL_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  int workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qmcipl
