#include "ztri/cyclops.hpp"

#include <algorithm>
#include <cmath>

#include "ztri/green.hpp"

namespace ztri {

namespace {

double params_scale(const CyclopsParams& p) {
    double s = std::max(std::abs(p.b1), std::abs(p.b2));
    for (double v : p.a) s = std::max(s, std::abs(v));
    return s;
}

// Delegation for degenerate eyes: m = 0 is a pure type D matrix, m = n a
// pure flipped type D matrix.
TypeDParams degenerate_typed(const CyclopsParams& p) {
    return TypeDParams{p.a, p.m == p.order(), true};
}

double bridge(const CyclopsParams& p) {
    return p.a[p.m - 1] * p.a[p.m] - p.b1 * p.b2;  // a_m * a_{m+1} - b1*b2
}

}  // namespace

void CyclopsParams::validate(const Tolerance& tol) const {
    const std::size_t n = order();
    if (n == 0) throw ShapeError("CyclopsParams: empty parameter list");
    if (m > n) throw ShapeError("CyclopsParams: eye out of range");
    const double thr = tol.threshold(params_scale(*this));
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (a[i] - a[i + 1] <= thr)
            throw OrderingViolation("CyclopsParams: a_1 > ... > a_m fails");
    for (std::size_t i = m; i + 1 < n; ++i)
        if (a[i + 1] - a[i] <= thr)
            throw OrderingViolation("CyclopsParams: a_n > ... > a_{m+1} fails");
}

DenseMatrix cyclops_build(const CyclopsParams& p, const Tolerance& tol) {
    p.validate(tol);
    const std::size_t n = p.order(), m = p.m;
    DenseMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i < m && j < m)
                c(i, j) = p.a[std::max(i, j)];
            else if (i >= m && j >= m)
                c(i, j) = p.a[std::min(i, j)];
            else
                c(i, j) = i < m ? p.b1 : p.b2;
        }
    return c;
}

std::optional<CyclopsParams> cyclops_match_eye(const DenseMatrix& mat, std::size_t eye,
                                               const Tolerance& tol) {
    const std::size_t n = mat.order();
    if (eye > n) return std::nullopt;
    const double thr = tol.threshold(mat.max_abs());

    CyclopsParams p;
    p.m = eye;
    p.a.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.a[i] = mat(i, i);
    for (std::size_t i = 0; i + 1 < eye; ++i)
        if (p.a[i] - p.a[i + 1] <= thr) return std::nullopt;
    for (std::size_t i = eye; i + 1 < n; ++i)
        if (p.a[i + 1] - p.a[i] <= thr) return std::nullopt;

    if (eye >= 1 && eye <= n - 1) {
        p.b1 = mat(0, eye);
        p.b2 = mat(eye, 0);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double want;
            if (i < eye && j < eye)
                want = p.a[std::max(i, j)];
            else if (i >= eye && j >= eye)
                want = p.a[std::min(i, j)];
            else
                want = i < eye ? p.b1 : p.b2;
            if (std::abs(mat(i, j) - want) > thr) return std::nullopt;
        }
    return p;
}

std::optional<CyclopsParams> cyclops_recognize(const DenseMatrix& mat, const Tolerance& tol) {
    for (std::size_t eye = 0; eye <= mat.order(); ++eye)
        if (auto p = cyclops_match_eye(mat, eye, tol)) return p;
    return std::nullopt;
}

CyclopsSchur cyclops_schur(const CyclopsParams& p, SchurSide side, const Tolerance& tol) {
    p.validate(tol);
    if (p.degenerate()) throw DegenerateEye("cyclops_schur: eye m in {0, n}");
    const double thr = tol.threshold(params_scale(p));
    const std::size_t n = p.order(), m = p.m;

    CyclopsSchur out;
    if (side == SchurSide::eliminate_11) {
        if (std::abs(p.a[m - 1]) <= thr) throw DivisionByZero("cyclops_schur: a_m is zero");
        out.shift = p.b1 * p.b2 / p.a[m - 1];
        out.block.flipped = false;
        out.block.params.assign(p.a.begin() + m, p.a.end());
    } else {
        if (std::abs(p.a[m]) <= thr) throw DivisionByZero("cyclops_schur: a_{m+1} is zero");
        out.shift = p.b1 * p.b2 / p.a[m];
        out.block.flipped = true;
        out.block.params.assign(p.a.begin(), p.a.begin() + m);
    }
    for (double& v : out.block.params) v -= out.shift;
    out.block.strict = true;
    (void)n;
    return out;
}

double cyclops_det(const CyclopsParams& p) {
    p.validate();
    if (p.degenerate()) return typed_det(degenerate_typed(p));
    const std::size_t n = p.order(), m = p.m;
    double det = bridge(p);
    for (std::size_t i = 0; i + 1 < m; ++i) det *= p.a[i] - p.a[i + 1];
    for (std::size_t i = m + 1; i < n; ++i) det *= p.a[i] - p.a[i - 1];
    return det;
}

CyclopsNonsingularity cyclops_is_nonsingular(const CyclopsParams& p, const Tolerance& tol) {
    p.validate(tol);
    const double thr = tol.threshold(std::max(1.0, params_scale(p)));
    CyclopsNonsingularity out;
    if (p.degenerate()) {
        const double det = typed_det(degenerate_typed(p));
        out.nonsingular = std::abs(det) > thr;
        out.det_sign = !out.nonsingular ? DetSign::zero
                                        : (det < 0 ? DetSign::negative : DetSign::positive);
        return out;
    }
    const double disc = bridge(p);
    out.nonsingular = std::abs(disc) > thr;
    out.det_sign =
        !out.nonsingular ? DetSign::zero : (disc < 0 ? DetSign::negative : DetSign::positive);
    return out;
}

TridiagonalMatrix cyclops_inverse(const CyclopsParams& p, const Tolerance& tol) {
    p.validate(tol);
    if (p.degenerate()) return typed_inverse(degenerate_typed(p), tol);
    const std::size_t n = p.order(), m = p.m;
    const std::vector<double>& a = p.a;
    const double thr = tol.threshold(std::max(1.0, params_scale(p)));
    const double denom = bridge(p);
    if (std::abs(denom) <= thr)
        throw SingularMatrix("cyclops_inverse: a_m a_{m+1} - b1 b2 is tolerance-zero");

    std::vector<double> diag(n, 0.0), sup(n - 1, 0.0), sub(n - 1, 0.0);
    // Flipped-type-D rows 1..m-1 (0-based 0..m-2).
    for (std::size_t i = 0; i + 1 < m; ++i) {
        diag[i] = 1.0 / (a[i] - a[i + 1]);
        if (i > 0) diag[i] += 1.0 / (a[i - 1] - a[i]);
        sup[i] = sub[i] = -1.0 / (a[i] - a[i + 1]);
    }
    // Eye rows m, m+1 (0-based m-1, m).
    diag[m - 1] = a[m] / denom;
    if (m >= 2) diag[m - 1] += 1.0 / (a[m - 2] - a[m - 1]);
    diag[m] = a[m - 1] / denom;
    if (m + 1 < n) diag[m] += 1.0 / (a[m + 1] - a[m]);
    sup[m - 1] = -p.b1 / denom;
    sub[m - 1] = -p.b2 / denom;
    // Type-D rows m+2..n (0-based m+1..n-1).
    for (std::size_t i = m + 1; i < n; ++i) {
        diag[i] = 1.0 / (a[i] - a[i - 1]);
        if (i + 1 < n) diag[i] += 1.0 / (a[i + 1] - a[i]);
        sup[i - 1] = sub[i - 1] = -1.0 / (a[i] - a[i - 1]);
    }
    return TridiagonalMatrix(std::move(diag), std::move(sup), std::move(sub));
}

RowColSums cyclops_row_col_sums(const CyclopsParams& p, const Tolerance& tol) {
    const TridiagonalMatrix inv = cyclops_inverse(p, tol);
    const DenseMatrix dense = to_dense(inv);
    return RowColSums{dense.row_sums(), dense.col_sums()};
}

bool cyclops_inverse_is_z(const CyclopsParams& p, const Tolerance& tol) {
    p.validate(tol);
    if (p.degenerate()) {
        // Strictly ordered (flipped) type D matrices always have tridiagonal
        // Z inverses: every off-diagonal entry is -1/gap with a positive gap.
        return true;
    }
    const double thr = tol.threshold(std::max(1.0, params_scale(p)));
    const double denom = bridge(p);
    if (std::abs(denom) <= thr) throw SingularMatrix("cyclops_inverse_is_z: singular cyclops");
    const double sign = denom < 0 ? -1.0 : 1.0;
    const bool b1_ok = std::abs(p.b1) <= thr || p.b1 * sign > 0;
    const bool b2_ok = std::abs(p.b2) <= thr || p.b2 * sign > 0;
    return b1_ok && b2_ok;
}

LsClassification cyclops_predict_ls(const CyclopsParams& p, const Tolerance& tol) {
    p.validate(tol);
    if (p.degenerate()) {
        // Pure (flipped) type D: the Green prediction applies with the unit
        // factor on the other side.
        std::vector<double> ones(p.order(), 1.0);
        GreenFactors f = p.m == 0 ? GreenFactors{p.a, ones, {}} : GreenFactors{ones, p.a, {}};
        return green_predict_ls(f, tol);
    }
    const CyclopsNonsingularity ns = cyclops_is_nonsingular(p, tol);
    if (!ns.nonsingular) throw SingularMatrix("cyclops_predict_ls: singular cyclops");
    if (!cyclops_inverse_is_z(p, tol))
        throw PreconditionViolation("cyclops_predict_ls: inverse is not a Z-matrix");

    const int n = static_cast<int>(p.order());
    const int m = static_cast<int>(p.m);
    const double thr = tol.threshold(std::max(1.0, params_scale(p)));
    const double bb = p.b1 * p.b2;

    // chi / Upsilon: gaps k-j over pairs j <= m < k with a_j a_k - b1 b2
    // negative / positive.
    int x = n + 1, y = n + 1;
    for (int j = 1; j <= m; ++j)
        for (int k = m + 1; k <= n; ++k) {
            const double v = p.a[j - 1] * p.a[k - 1] - bb;
            if (v < -thr) x = std::min(x, k - j);
            if (v > thr) y = std::min(y, k - j);
        }
    int r = 0, t = 0;
    for (int j = 1; j <= m; ++j)
        if (p.a[j - 1] > thr) ++r;
    for (int j = m + 1; j <= n; ++j)
        if (p.a[j - 1] > thr) ++t;

    LsClassification out;
    out.det_sign = ns.det_sign;
    if (ns.det_sign == DetSign::positive) {
        if (p.a[m - 1] > thr)
            out.s = n;
        else
            out.s = n - 1 - std::max({m, n - m, n - x + 1});
    } else {
        out.s = n - 1 - std::max({r, t, n - y + 1});
    }
    out.witness["x"] = x;
    out.witness["y"] = y;
    out.witness["r"] = r;
    out.witness["t"] = t;
    return out;
}

}  // namespace ztri
