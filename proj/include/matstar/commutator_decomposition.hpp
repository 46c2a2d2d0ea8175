#pragma once

#include <cstdint>
#include <utility>

#include "matstar/matrix.hpp"

namespace matstar {

/// Writes a traceless m as xy - yx.
///
/// When the field has at least n distinct elements, m is first conjugated to
/// a matrix with zero diagonal (one diagonal slot at a time, using a cyclic
/// vector of the trailing block), after which x = diag(1, ..., n) and y is
/// read off entrywise. Otherwise m is brought to Hessenberg form, rescaled so
/// its subdiagonal sums to zero, and solved against the nilpotent shift; this
/// is retried on random conjugates of m. Last, random x are tried and
/// xy - yx = m is solved linearly in y.
///
/// Throws NotTraceless, or DecompositionFailed when every attempt fails.
std::pair<Matrix, Matrix> decompose_traceless(const Matrix& m, std::uint64_t seed = 0);

}  // namespace matstar
