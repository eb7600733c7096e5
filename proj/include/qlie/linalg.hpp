#pragma once

#include "qlie/kmatrix.hpp"

#include <optional>
#include <vector>

namespace qlie {

/// Exact inverse by Gauss-Jordan elimination; throws DimensionMismatch for
/// non-square input and DivisionByZero for singular matrices.
KMatrix exact_inverse(const KMatrix& m);

/// Solves A x = b exactly for a (possibly overdetermined) system; returns
/// nullopt when the system is inconsistent. A has full column rank in every
/// use here; that is asserted.
std::optional<std::vector<CoeffElem>> solve_exact(const KMatrix& a, const std::vector<CoeffElem>& b);

} // namespace qlie
