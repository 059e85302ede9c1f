#include "ztri/type_d.hpp"

#include <algorithm>
#include <cmath>

namespace ztri {

namespace {

double params_scale(const std::vector<double>& a) {
    double s = 0.0;
    for (double v : a) s = std::max(s, std::abs(v));
    return s;
}

// Strictly increasing (not flipped) or strictly decreasing (flipped),
// with gaps beyond the zero threshold.
bool ordering_holds(const TypeDParams& p, const Tolerance& tol) {
    const double thr = tol.threshold(params_scale(p.params));
    for (std::size_t i = 0; i + 1 < p.params.size(); ++i) {
        const double gap = p.flipped ? p.params[i] - p.params[i + 1]
                                     : p.params[i + 1] - p.params[i];
        if (gap <= thr) return false;
    }
    return true;
}

}  // namespace

DenseMatrix typed_build(const TypeDParams& p, const Tolerance& tol) {
    if (p.params.empty()) throw ShapeError("typed_build: empty parameter list");
    if (p.strict && !ordering_holds(p, tol))
        throw OrderingViolation("typed_build: strict parameter ordering fails");
    const std::size_t n = p.params.size();
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = p.flipped ? p.params[std::max(i, j)] : p.params[std::min(i, j)];
    return m;
}

std::optional<TypeDParams> typed_recognize(const DenseMatrix& m, const Tolerance& tol) {
    const std::size_t n = m.order();
    const double thr = tol.threshold(m.max_abs());
    std::vector<double> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = m(i, i);

    auto matches = [&](bool flipped) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const double want = flipped ? a[std::max(i, j)] : a[std::min(i, j)];
                if (std::abs(m(i, j) - want) > thr) return false;
            }
        return true;
    };

    for (bool flipped : {false, true}) {
        if (!matches(flipped)) continue;
        TypeDParams p{a, flipped, true};
        p.strict = ordering_holds(p, tol);
        return p;
    }
    return std::nullopt;
}

double typed_det(const TypeDParams& p) {
    std::vector<double> a = p.params;
    if (p.flipped) std::reverse(a.begin(), a.end());
    double det = a[0];
    for (std::size_t j = 1; j < a.size(); ++j) det *= a[j] - a[j - 1];
    return det;
}

TridiagonalMatrix typed_inverse(const TypeDParams& p, const Tolerance& tol) {
    const std::size_t n = p.params.size();
    const std::vector<double>& a = p.params;
    const double thr = tol.threshold(params_scale(a));

    const std::size_t anchor = p.flipped ? n - 1 : 0;
    if (std::abs(a[anchor]) <= thr)
        throw SingularMatrix("typed_inverse: anchor parameter is tolerance-zero");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (std::abs(a[i + 1] - a[i]) <= thr)
            throw SingularMatrix("typed_inverse: parameter gap is tolerance-zero");

    if (n == 1) return TridiagonalMatrix({1.0 / a[0]}, {}, {});

    std::vector<double> diag(n), sup(n - 1), sub(n - 1);
    if (!p.flipped) {
        diag[0] = 1.0 / a[0] + 1.0 / (a[1] - a[0]);
        diag[n - 1] = 1.0 / (a[n - 1] - a[n - 2]);
        for (std::size_t i = 1; i + 1 < n; ++i)
            diag[i] = 1.0 / (a[i] - a[i - 1]) + 1.0 / (a[i + 1] - a[i]);
        for (std::size_t i = 0; i + 1 < n; ++i) sup[i] = sub[i] = -1.0 / (a[i + 1] - a[i]);
    } else {
        diag[0] = 1.0 / (a[0] - a[1]);
        diag[n - 1] = 1.0 / a[n - 1] + 1.0 / (a[n - 2] - a[n - 1]);
        for (std::size_t i = 1; i + 1 < n; ++i)
            diag[i] = 1.0 / (a[i] - a[i + 1]) + 1.0 / (a[i - 1] - a[i]);
        for (std::size_t i = 0; i + 1 < n; ++i) sup[i] = sub[i] = -1.0 / (a[i] - a[i + 1]);
    }
    return TridiagonalMatrix(std::move(diag), std::move(sup), std::move(sub));
}

std::vector<double> typed_inverse_row_sums(const TypeDParams& p, const Tolerance& tol) {
    if (p.flipped)
        throw DomainError("typed_inverse_row_sums: defined for the not-flipped convention");
    const double thr = tol.threshold(params_scale(p.params));
    if (std::abs(p.params[0]) <= thr)
        throw SingularMatrix("typed_inverse_row_sums: a_1 is tolerance-zero");
    std::vector<double> sums(p.params.size(), 0.0);
    sums[0] = 1.0 / p.params[0];
    return sums;
}

}  // namespace ztri
