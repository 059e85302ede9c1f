#include "ztri/matrix.hpp"

#include <algorithm>

namespace ztri {

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    std::size_t n = rows.size();
    if (n == 0) throw ShapeError("from_rows: empty matrix");
    std::vector<double> e;
    e.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw ShapeError("from_rows: matrix not square");
        e.insert(e.end(), r.begin(), r.end());
    }
    return DenseMatrix(n, std::move(e));
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double DenseMatrix::max_abs() const {
    double s = 0.0;
    for (double v : e_) s = std::max(s, std::abs(v));
    return s;
}

DenseMatrix DenseMatrix::submatrix(const std::vector<std::size_t>& rows,
                                   const std::vector<std::size_t>& cols) const {
    if (rows.empty() || cols.empty() || rows.size() != cols.size())
        throw ShapeError("submatrix: index sets must be nonempty and of equal size");
    DenseMatrix out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& other) const {
    if (other.n_ != n_) throw ShapeError("multiply: order mismatch");
    DenseMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            double v = (*this)(i, k);
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < n_; ++j) out(i, j) += v * other(k, j);
        }
    return out;
}

std::vector<double> DenseMatrix::row_sums() const {
    std::vector<double> s(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) s[i] += (*this)(i, j);
    return s;
}

std::vector<double> DenseMatrix::col_sums() const {
    std::vector<double> s(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) s[j] += (*this)(i, j);
    return s;
}

TridiagonalMatrix::TridiagonalMatrix(std::vector<double> d, std::vector<double> sup,
                                     std::vector<double> sub)
    : n(d.size()), diag(std::move(d)), superdiag(std::move(sup)), subdiag(std::move(sub)) {
    if (n == 0) throw ShapeError("TridiagonalMatrix: order must be >= 1");
    if (superdiag.size() != n - 1 || subdiag.size() != n - 1)
        throw ShapeError("TridiagonalMatrix: band length mismatch");
    auto finite = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
    };
    if (!finite(diag) || !finite(superdiag) || !finite(subdiag))
        throw DomainError("TridiagonalMatrix: non-finite entry");
}

bool is_z_matrix(const DenseMatrix& m, const Tolerance& tol) {
    const double thr = tol.threshold(m.max_abs());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j)
            if (i != j && m(i, j) > thr) return false;
    return true;
}

bool is_tridiagonal(const DenseMatrix& m, const Tolerance& tol) {
    const double thr = tol.threshold(m.max_abs());
    for (std::size_t i = 0; i < m.order(); ++i)
        for (std::size_t j = 0; j < m.order(); ++j) {
            std::size_t d = i > j ? i - j : j - i;
            if (d > 1 && std::abs(m(i, j)) > thr) return false;
        }
    return true;
}

namespace {

// BFS reachability from vertex 0 in the pattern graph (or its reverse).
bool all_reachable(const DenseMatrix& m, double thr, bool reverse) {
    const std::size_t n = m.order();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        std::size_t u = queue.back();
        queue.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            if (seen[v] || v == u) continue;
            double w = reverse ? m(v, u) : m(u, v);
            if (std::abs(w) > thr) {
                seen[v] = 1;
                queue.push_back(v);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

bool is_irreducible(const DenseMatrix& m, const Tolerance& tol) {
    const double thr = tol.threshold(m.max_abs());
    return all_reachable(m, thr, false) && all_reachable(m, thr, true);
}

DenseMatrix to_dense(const TridiagonalMatrix& t) {
    DenseMatrix m(t.n);
    for (std::size_t i = 0; i < t.n; ++i) m(i, i) = t.diag[i];
    for (std::size_t i = 0; i + 1 < t.n; ++i) {
        m(i, i + 1) = t.superdiag[i];
        m(i + 1, i) = t.subdiag[i];
    }
    return m;
}

TridiagonalMatrix extract_tridiagonal(const DenseMatrix& m, const Tolerance& tol) {
    if (!is_tridiagonal(m, tol))
        throw ShapeError("extract_tridiagonal: band-external entry above zero threshold");
    const std::size_t n = m.order();
    std::vector<double> d(n), sup(n > 0 ? n - 1 : 0), sub(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) d[i] = m(i, i);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        sup[i] = m(i, i + 1);
        sub[i] = m(i + 1, i);
    }
    return TridiagonalMatrix(std::move(d), std::move(sup), std::move(sub));
}

}  // namespace ztri
