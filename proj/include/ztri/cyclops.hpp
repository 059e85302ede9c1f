#pragma once

#include <optional>
#include <vector>

#include "ztri/matrix.hpp"
#include "ztri/oracle.hpp"
#include "ztri/type_d.hpp"

namespace ztri {

/// Cyclops with eye m+: a flipped type D block on rows/cols 1..m, a type D
/// block on m+1..n, and constant off-diagonal blocks b1 (upper right) and
/// b2 (lower left). m in {0, n} degenerates to a pure (flipped) type D
/// matrix with b1, b2 unused.
struct CyclopsParams {
    std::size_t m = 0;  // eye index, 0 <= m <= n
    std::vector<double> a;
    double b1 = 0.0;
    double b2 = 0.0;

    std::size_t order() const { return a.size(); }
    bool degenerate() const { return m == 0 || m == order(); }
    void validate(const Tolerance& tol = {}) const;  // strict eye-side orderings
};

DenseMatrix cyclops_build(const CyclopsParams& p, const Tolerance& tol = {});

/// Scans all eyes m = 0..n; returns the parameters of the smallest
/// matching m.
std::optional<CyclopsParams> cyclops_recognize(const DenseMatrix& m, const Tolerance& tol = {});

/// Pattern test for one specific eye.
std::optional<CyclopsParams> cyclops_match_eye(const DenseMatrix& m, std::size_t eye,
                                               const Tolerance& tol = {});

enum class SchurSide { eliminate_11, eliminate_22 };

/// Schur complement of one diagonal block: a rank-one shift of the other
/// block's type D parameters.
struct CyclopsSchur {
    TypeDParams block;  // eliminate_11 -> type D; eliminate_22 -> flipped
    double shift = 0.0; // b1*b2/a_m or b1*b2/a_{m+1}
};

CyclopsSchur cyclops_schur(const CyclopsParams& p, SchurSide side, const Tolerance& tol = {});

/// det C = (a_m a_{m+1} - b1 b2) * prod_{j=1}^{m-1}(a_{m-j} - a_{m-j+1})
///         * prod_{j=m+2}^{n}(a_j - a_{j-1}); degenerate eyes route to
/// typed_det.
double cyclops_det(const CyclopsParams& p);

struct CyclopsNonsingularity {
    bool nonsingular = false;
    DetSign det_sign = DetSign::zero;
};

/// Nonsingular iff a_m a_{m+1} - b1 b2 is beyond the zero threshold; the
/// determinant sign equals the sign of that quantity.
CyclopsNonsingularity cyclops_is_nonsingular(const CyclopsParams& p, const Tolerance& tol = {});

/// Closed-form tridiagonal inverse.
TridiagonalMatrix cyclops_inverse(const CyclopsParams& p, const Tolerance& tol = {});

struct RowColSums {
    std::vector<double> rows;
    std::vector<double> cols;
};

/// Row and column sums of the closed-form inverse; zero except at indices
/// m and m+1.
RowColSums cyclops_row_col_sums(const CyclopsParams& p, const Tolerance& tol = {});

/// Sign conditions under which the inverse is a Z-matrix: each of b1, b2 is
/// zero or matches the sign of a_m a_{m+1} - b1 b2.
bool cyclops_inverse_is_z(const CyclopsParams& p, const Tolerance& tol = {});

/// L_s class of C^{-1} predicted from the parameters. Requires a
/// nonsingular cyclops whose inverse is a Z-matrix. Witness carries
/// x, y, r, t.
LsClassification cyclops_predict_ls(const CyclopsParams& p, const Tolerance& tol = {});

}  // namespace ztri
