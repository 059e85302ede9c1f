#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ztri/matrix.hpp"

namespace ztri {

enum class DetSign { negative, zero, positive };

std::string to_string(DetSign s);

/// Nested class index s of a Z-matrix (s = n means M-matrix), together with
/// the quantities that produced it (method dependent).
struct LsClassification {
    int s = 0;
    DetSign det_sign = DetSign::zero;
    std::map<std::string, double> witness;
};

/// All principal minors of order <= max_order, grouped by order.
struct MinorTable {
    struct Entry {
        std::vector<std::size_t> indices;  // 0-based, ascending
        double value = 0.0;
    };
    std::vector<std::vector<Entry>> by_order;  // by_order[k-1] holds order-k minors

    const std::vector<Entry>& of_order(std::size_t k) const { return by_order.at(k - 1); }
    double max_of_order(std::size_t k) const;
    double min_of_order(std::size_t k) const;
};

constexpr std::size_t kDefaultMinorBudget = 10'000'000;

/// Determinant via partial-pivoting LU.
double lu_det(const DenseMatrix& m);

/// Inverse via partial-pivoting LU; throws SingularMatrix when a pivot
/// underflows the zero threshold.
DenseMatrix lu_inverse(const DenseMatrix& m);

MinorTable principal_minors(const DenseMatrix& m, std::size_t max_order,
                            std::size_t budget = kDefaultMinorBudget);

/// Spectral radius of an entrywise-nonnegative matrix, computed from the
/// spectral radius formula rho = lim ||B^k||^(1/k) via normalized repeated
/// squaring. Immune to the oscillation that defeats plain power iteration
/// on periodic patterns.
double spectral_radius(const DenseMatrix& b);

/// L_s straight from the definition: shift t = max diagonal entry, B = tI - A,
/// rho_k(B) = max spectral radius over k x k principal submatrices, and the
/// unique s with rho_s(B) <= t < rho_{s+1}(B).
LsClassification ls_classify_by_definition(const DenseMatrix& a, const Tolerance& tol = {},
                                           std::size_t budget = kDefaultMinorBudget);

/// L_s from the signs of the principal minors of A^{-1}.
LsClassification ls_classify_by_minor_signs(const DenseMatrix& a, const Tolerance& tol = {},
                                            std::size_t budget = kDefaultMinorBudget);

bool is_m_matrix(const DenseMatrix& a, const Tolerance& tol = {});

/// Checks ALL (not only principal) k x k minors for k <= max_order.
bool is_totally_nonnegative(const DenseMatrix& m, std::size_t max_order,
                            const Tolerance& tol = {},
                            std::size_t budget = kDefaultMinorBudget);

/// Default max minor order for total nonnegativity at a given size: full
/// order for n <= 8, else 5.
std::size_t tn_default_order(std::size_t n);

}  // namespace ztri
