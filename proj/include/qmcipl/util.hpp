#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qmcipl {

// Raised when a request exceeds the desk-scale limits a routine supports.
// The CLI maps this to exit code 3.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(uint64_t n);

// base^exp with overflow check.
uint64_t ipow(uint64_t base, unsigned exp);

// Deterministic compensated (Kahan) accumulator.
template <typename T>
class BasicKahanAccumulator {
 public:
  void add(T x) {
    T y = x - comp_;
    T t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  T value() const { return sum_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

using KahanAccumulator = BasicKahanAccumulator<double>;
// Criterion sums run near 1 while the quantity of interest is the mean minus
// one, as small as 1e-14; the extended accumulator keeps that resolvable.
using LongKahanAccumulator = BasicKahanAccumulator<long double>;

double kahan_sum(std::span<const double> v);
double pairwise_sum(std::span<const double> v);

// Worker cap from QMC_IPL_THREADS (>=1); hardware concurrency otherwise.
int worker_count();

// Runs fn(i) for i in [0, n). Work is split across worker_count() threads;
// callers that need deterministic output must write results indexed by i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qmcipl
