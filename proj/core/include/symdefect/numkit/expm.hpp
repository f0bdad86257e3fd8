#pragma once

#include "symdefect/numkit/linalg.hpp"

namespace symdefect::numkit {

/// Matrix exponential by scaling and squaring with diagonal Pade
/// approximants of degree 3..13 (Higham 2005 thresholds).
///
/// Throws DimensionError for non-square input and std::domain_error for
/// non-finite entries.
[[nodiscard]] ComplexMatrix expm(const ComplexMatrix& m);

/// expm(m) * v. Forms the exponential explicitly; intended for dim <= 256.
[[nodiscard]] ComplexVector expm_apply(const ComplexMatrix& m, const ComplexVector& v);

}  // namespace symdefect::numkit
