#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "ztri/errors.hpp"

namespace ztri {

/// Mixed absolute/relative zero threshold. A value x counts as zero against
/// a matrix when |x| <= abs_eps + rel_eps * scale, where scale is the max
/// absolute entry of the matrix under test.
struct Tolerance {
    double abs_eps = 1e-9;
    double rel_eps = 1e-9;

    Tolerance() = default;
    Tolerance(double abs_e, double rel_e) : abs_eps(abs_e), rel_eps(rel_e) {
        if (!(abs_eps > 0.0) || !(rel_eps > 0.0))
            throw DomainError("Tolerance: abs_eps and rel_eps must be strictly positive");
    }

    double threshold(double scale) const { return abs_eps + rel_eps * scale; }
    bool is_zero(double x, double scale) const { return std::abs(x) <= threshold(scale); }
};

/// Square real matrix, row-major. Entries are validated finite at
/// construction; instances are treated as immutable values.
class DenseMatrix {
public:
    explicit DenseMatrix(std::size_t n) : n_(n), e_(n * n, 0.0) {
        if (n == 0) throw ShapeError("DenseMatrix: order must be >= 1");
    }

    DenseMatrix(std::size_t n, std::vector<double> entries) : n_(n), e_(std::move(entries)) {
        if (n == 0) throw ShapeError("DenseMatrix: order must be >= 1");
        if (e_.size() != n * n) throw ShapeError("DenseMatrix: entry count != n*n");
        for (double v : e_)
            if (!std::isfinite(v)) throw DomainError("DenseMatrix: non-finite entry");
    }

    static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static DenseMatrix identity(std::size_t n);

    std::size_t order() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

    double max_abs() const;

    /// Extract the submatrix with the given (0-based, sorted) row and column
    /// index sets.
    DenseMatrix submatrix(const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) const;
    DenseMatrix principal_submatrix(const std::vector<std::size_t>& idx) const {
        return submatrix(idx, idx);
    }

    DenseMatrix transpose() const;
    DenseMatrix multiply(const DenseMatrix& other) const;

    std::vector<double> row_sums() const;
    std::vector<double> col_sums() const;

private:
    std::size_t n_;
    std::vector<double> e_;
};

/// Sub/main/super diagonals of a tridiagonal matrix of order n.
struct TridiagonalMatrix {
    std::size_t n = 0;
    std::vector<double> diag;      // n entries
    std::vector<double> superdiag; // n-1 entries, superdiag[i] at (i, i+1)
    std::vector<double> subdiag;   // n-1 entries, subdiag[i] at (i+1, i)

    TridiagonalMatrix() = default;
    TridiagonalMatrix(std::vector<double> d, std::vector<double> sup, std::vector<double> sub);

    bool operator==(const TridiagonalMatrix&) const = default;
};

bool is_z_matrix(const DenseMatrix& m, const Tolerance& tol = {});
bool is_tridiagonal(const DenseMatrix& m, const Tolerance& tol = {});

/// True iff the directed graph with an arc i->j whenever m_ij is not
/// tolerance-zero (i != j) is strongly connected. Two BFS passes from
/// vertex 1, forward and reverse.
bool is_irreducible(const DenseMatrix& m, const Tolerance& tol = {});

DenseMatrix to_dense(const TridiagonalMatrix& t);

/// Inverse of to_dense; throws ShapeError if any band-external entry exceeds
/// the zero threshold.
TridiagonalMatrix extract_tridiagonal(const DenseMatrix& m, const Tolerance& tol = {});

}  // namespace ztri
