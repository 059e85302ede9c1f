#pragma once

#include <optional>
#include <vector>

#include "ztri/matrix.hpp"
#include "ztri/oracle.hpp"

namespace ztri {

/// Factors of a row-scaled Green matrix: C = D^{-1}(A o B) with
/// c_ij = a_min(i,j) * b_max(i,j) / d_i, all d_i > 0.
struct GreenFactors {
    std::vector<double> a;  // weak type D parameters
    std::vector<double> b;  // flipped weak type D parameters
    std::vector<double> d;  // positive row scaling; empty means all ones

    std::size_t order() const { return a.size(); }
    double d_at(std::size_t i) const { return d.empty() ? 1.0 : d[i]; }
    void validate() const;
};

/// h_i = a_i * b_{i-1} - a_{i-1} * b_i for i = 2..n; h.values[k] holds
/// h_{k+2} in 1-based indexing.
struct HSequence {
    std::vector<double> values;

    bool all_positive(double thr) const {
        for (double h : values)
            if (h <= thr) return false;
        return true;
    }
};

DenseMatrix green_build(const GreenFactors& f);

HSequence h_sequence(const GreenFactors& f);

/// det C = a_1 * b_n * prod h_i / prod d_i.
double green_det(const GreenFactors& f);

/// Determinant of the principal submatrix of the symmetric Green matrix
/// (d = ones) on the 0-based ascending index set: principal submatrices of
/// Green matrices are Green with the sub-parameter sequences.
double green_principal_minor(const GreenFactors& f, const std::vector<std::size_t>& idx);

/// det G(i|j) for the symmetric Green matrix, 1-based indices:
/// det G / h_{min(i,j)+1} when |i-j| = 1, 0 when |i-j| > 1.
/// Throws DomainError when i = j.
double green_near_minor(const GreenFactors& f, std::size_t i, std::size_t j);

/// Closed-form tridiagonal inverse of C = D^{-1}(A o B): superdiagonal of
/// the symmetric inverse is -1/h_{i+1}, diagonal from the principal Green
/// minors, then re-scaled by D on the right.
TridiagonalMatrix green_inverse(const GreenFactors& f, const Tolerance& tol = {});

enum class NotGreenReason { asymmetry_unfixable, pattern_mismatch, zero_structure_ambiguous };

const char* to_string(NotGreenReason r);

struct GreenDetectResult {
    std::optional<GreenFactors> factors;
    NotGreenReason reason = NotGreenReason::pattern_mismatch;

    bool ok() const { return factors.has_value(); }
};

/// Row-scaled Green factorization: find positive d with d_i c_ij = d_j c_ji,
/// then read the factors off the symmetrized matrix with b_n = 1.
GreenDetectResult green_detect(const DenseMatrix& c, const Tolerance& tol = {});

/// Canonical scaling: b_n = 1 when b_n != 0, otherwise max |b_i| = 1 with
/// the first nonzero b_i positive.
GreenFactors canonicalize(GreenFactors f, const Tolerance& tol = {});

struct InverseTridiagonalZResult {
    bool ok = false;
    std::optional<GreenFactors> factors;
    std::optional<HSequence> h;
};

/// True iff C is (up to positive row scaling) a Green matrix with all
/// h_i > 0, i.e. the inverse of a tridiagonal Z-matrix. Requires C
/// nonsingular and irreducible.
InverseTridiagonalZResult is_inverse_tridiagonal_z(const DenseMatrix& c,
                                                   const Tolerance& tol = {});

/// L_s class of C^{-1} predicted from the factor parameters. Requires all
/// h_i > 0 and nonzero determinant. Witness carries t, r, q.
LsClassification green_predict_ls(const GreenFactors& f, const Tolerance& tol = {});

struct InverseTridiagonalMResult {
    bool ok = false;
    std::optional<GreenFactors> factors;
};

/// True iff C^{-1} is a tridiagonal M-matrix: factors with all parameters of
/// one common sign and strictly increasing positive ratios a_i/b_i.
InverseTridiagonalMResult is_inverse_tridiagonal_m(const DenseMatrix& c,
                                                   const Tolerance& tol = {});

/// Property-test hook for the implication "floor(n/2) <= s < n implies
/// det C < 0"; vacuously true when s is outside that range.
bool green_det_sign_check(const GreenFactors& f, const Tolerance& tol = {});

}  // namespace ztri
