#pragma once

#include <optional>
#include <vector>

#include "ztri/matrix.hpp"

namespace ztri {

/// Parameters a_1..a_n of a (weak / flipped) type D matrix; the i-th
/// parameter equals the i-th diagonal entry in both conventions.
struct TypeDParams {
    std::vector<double> params;
    bool flipped = false;
    bool strict = true;

    std::size_t order() const { return params.size(); }
};

/// Entry (i,j) = a_min(i,j) (not flipped) or a_max(i,j) (flipped).
/// Throws OrderingViolation if strict is set but the ordering fails.
DenseMatrix typed_build(const TypeDParams& p, const Tolerance& tol = {});

/// Pattern match against both conventions; prefers not-flipped when both
/// match (constant matrices). The strict flag reflects the observed ordering.
std::optional<TypeDParams> typed_recognize(const DenseMatrix& m, const Tolerance& tol = {});

/// det = a_1 * prod_{j=2}^n (a_j - a_{j-1}); flipped input is evaluated on
/// the reversed parameter list.
double typed_det(const TypeDParams& p);

/// Closed-form tridiagonal inverse.
TridiagonalMatrix typed_inverse(const TypeDParams& p, const Tolerance& tol = {});

/// Row sums of the inverse, from the closed form: (1/a_1, 0, ..., 0).
/// Not flipped only.
std::vector<double> typed_inverse_row_sums(const TypeDParams& p, const Tolerance& tol = {});

}  // namespace ztri
