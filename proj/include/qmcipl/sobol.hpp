#pragma once

#include <cstdint>
#include <vector>

namespace qmcipl {

int sobol_max_dimension();

/// First 2^m points of the Sobol' sequence (Joe-Kuo direction numbers,
/// natural index order, origin first), row-major with stride s.
std::vector<double> sobol_points(int s, int m);

}  // namespace qmcipl
