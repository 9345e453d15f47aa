#pragma once

#include <cstdint>
#include <vector>

#include "cyclowed/matrix.hpp"

namespace cyclowed {

/// Elementary divisor valuations of a nonsingular matrix over Z_(p)[zeta_{p^n}], ascending.
///
/// Pivots on an entry of minimal t-valuation (first row, then first column on ties),
/// clears its column and drops the pivot row and column.
std::vector<Valuation> smith_valuations_dvr(const CycMatrix& a, std::int64_t p, int n);

/// Smith normal form diagonal d_1 | d_2 | ... of a nonsingular integer matrix, all positive.
std::vector<Integer> smith_divisors_z(const IntMatrix& a);

} // namespace cyclowed
