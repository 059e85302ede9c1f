#include "ztri/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace ztri {

std::string to_string(DetSign s) {
    switch (s) {
        case DetSign::negative: return "negative";
        case DetSign::zero: return "zero";
        case DetSign::positive: return "positive";
    }
    return "zero";
}

double MinorTable::max_of_order(std::size_t k) const {
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& e : of_order(k)) v = std::max(v, e.value);
    return v;
}

double MinorTable::min_of_order(std::size_t k) const {
    double v = std::numeric_limits<double>::infinity();
    for (const auto& e : of_order(k)) v = std::min(v, e.value);
    return v;
}

namespace {

struct LuFactors {
    DenseMatrix lu;
    std::vector<std::size_t> perm;
    int sign = 1;
    bool singular = false;
};

LuFactors lu_factor(const DenseMatrix& m) {
    const std::size_t n = m.order();
    LuFactors f{m, {}, 1, false};
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), 0);
    const double pivot_floor = 1e-13 * std::max(1.0, m.max_abs());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(f.lu(i, k)) > std::abs(f.lu(p, k))) p = i;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(p, j));
            std::swap(f.perm[k], f.perm[p]);
            f.sign = -f.sign;
        }
        const double piv = f.lu(k, k);
        if (std::abs(piv) <= pivot_floor) {
            f.singular = true;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double l = f.lu(i, k) / piv;
            f.lu(i, k) = l;
            for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= l * f.lu(k, j);
        }
    }
    return f;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        // next combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

double lu_det(const DenseMatrix& m) {
    LuFactors f = lu_factor(m);
    double det = f.sign;
    for (std::size_t k = 0; k < m.order(); ++k) det *= f.lu(k, k);
    return det;
}

DenseMatrix lu_inverse(const DenseMatrix& m) {
    const std::size_t n = m.order();
    LuFactors f = lu_factor(m);
    if (f.singular) throw SingularMatrix("lu_inverse: pivot below zero threshold");
    DenseMatrix inv(n);
    std::vector<double> x(n);
    for (std::size_t col = 0; col < n; ++col) {
        // solve LUx = P e_col
        for (std::size_t i = 0; i < n; ++i) x[i] = f.perm[i] == col ? 1.0 : 0.0;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
        for (std::size_t ii = n; ii > 0; --ii) {
            const std::size_t i = ii - 1;
            for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
            x[i] /= f.lu(i, i);
        }
        for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
    }
    return inv;
}

MinorTable principal_minors(const DenseMatrix& m, std::size_t max_order, std::size_t budget) {
    const std::size_t n = m.order();
    max_order = std::min(max_order, n);
    if (max_order == n && n > 14)
        throw SizeLimit("principal_minors: full enumeration limited to n <= 14");
    std::uint64_t count = 0;
    for (std::size_t k = 1; k <= max_order; ++k) count += binomial(n, k);
    if (count > budget) throw SizeLimit("principal_minors: enumeration budget exceeded");

    MinorTable t;
    t.by_order.resize(max_order);
    for (std::size_t k = 1; k <= max_order; ++k) {
        auto& entries = t.by_order[k - 1];
        entries.reserve(binomial(n, k));
        for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
            entries.push_back({idx, lu_det(m.principal_submatrix(idx))});
        });
    }
    return t;
}

double spectral_radius(const DenseMatrix& b) {
    const std::size_t n = b.order();
    auto norm_inf = [n](const DenseMatrix& m) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0.0;
            for (std::size_t j = 0; j < n; ++j) r += std::abs(m(i, j));
            s = std::max(s, r);
        }
        return s;
    };
    double s0 = norm_inf(b);
    if (s0 == 0.0) return 0.0;
    DenseMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = b(i, j) / s0;
    // B^(2^j) = a * exp(log_acc); estimate rho = exp(log_acc / 2^j).
    double log_acc = std::log(s0);
    double pow2 = 1.0;
    for (int j = 0; j < 64; ++j) {
        a = a.multiply(a);
        const double s = norm_inf(a);
        if (s == 0.0) return 0.0;  // nilpotent
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) a(i, k) /= s;
        log_acc = 2.0 * log_acc + std::log(s);
        pow2 *= 2.0;
    }
    return std::exp(log_acc / pow2);
}

namespace {

// rho_k(B): max spectral radius over all k x k principal submatrices.
double rho_k(const DenseMatrix& b, std::size_t k) {
    double best = 0.0;
    for_each_combination(b.order(), k, [&](const std::vector<std::size_t>& idx) {
        best = std::max(best, spectral_radius(b.principal_submatrix(idx)));
    });
    return best;
}

DetSign det_sign_of(double det, double thr) {
    if (std::abs(det) <= thr) return DetSign::zero;
    return det < 0 ? DetSign::negative : DetSign::positive;
}

}  // namespace

LsClassification ls_classify_by_definition(const DenseMatrix& a, const Tolerance& tol,
                                           std::size_t budget) {
    if (!is_z_matrix(a, tol)) throw NotZMatrix("ls_classify_by_definition: not a Z-matrix");
    const std::size_t n = a.order();
    std::uint64_t count = 0;
    for (std::size_t k = 1; k <= n; ++k) count += binomial(n, k);
    if (count > budget) throw SizeLimit("ls_classify_by_definition: subset budget exceeded");

    double t = a(0, 0);
    for (std::size_t i = 1; i < n; ++i) t = std::max(t, a(i, i));
    DenseMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = (i == j ? t : 0.0) - a(i, j);

    // rho_k is nondecreasing in k; s is the largest k with rho_k(B) <= t.
    const double slack = 1e-8 * std::max(1.0, std::abs(t));
    int s = 0;
    double rho_s = -std::numeric_limits<double>::infinity();
    double rho_next = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= n; ++k) {
        const double rho = rho_k(b, k);
        if (rho <= t + slack) {
            s = static_cast<int>(k);
            rho_s = rho;
        } else {
            rho_next = rho;
            break;
        }
    }

    LsClassification out;
    out.s = s;
    out.det_sign = det_sign_of(lu_det(a), tol.threshold(a.max_abs()));
    out.witness["t"] = t;
    out.witness["rho_s"] = rho_s;
    out.witness["rho_s_plus_1"] = rho_next;
    return out;
}

LsClassification ls_classify_by_minor_signs(const DenseMatrix& a, const Tolerance& tol,
                                            std::size_t budget) {
    if (!is_z_matrix(a, tol)) throw NotZMatrix("ls_classify_by_minor_signs: not a Z-matrix");
    const std::size_t n = a.order();
    const double det = lu_det(a);
    const DetSign sign = det_sign_of(det, tol.threshold(a.max_abs()));
    if (sign == DetSign::zero)
        throw SingularMatrix("ls_classify_by_minor_signs: tolerance-singular input");

    const DenseMatrix c = lu_inverse(a);
    const MinorTable minors = principal_minors(c, n, budget);
    const double thr = tol.threshold(c.max_abs());

    LsClassification out;
    out.det_sign = sign;
    // Order-0 principal minor is 1 by convention, so a witness always exists.
    int witness_order = 0;
    if (sign == DetSign::negative) {
        // Largest order with a positive minor; everything above is nonpositive.
        for (std::size_t k = 1; k <= n; ++k)
            if (minors.max_of_order(k) > thr) witness_order = static_cast<int>(k);
        out.s = static_cast<int>(n) - 1 - witness_order;
        out.witness["witness_minor_order"] = witness_order;
        out.witness["witness_minor_value"] =
            witness_order == 0 ? 1.0 : minors.max_of_order(witness_order);
    } else {
        // det > 0: witness is a negative minor; if none exists at any order,
        // all minors of the inverse are nonnegative and A is an M-matrix (s = n).
        bool found = false;
        for (std::size_t k = 1; k <= n; ++k)
            if (minors.min_of_order(k) < -thr) {
                witness_order = static_cast<int>(k);
                found = true;
            }
        if (found) {
            out.s = static_cast<int>(n) - 1 - witness_order;
            out.witness["witness_minor_order"] = witness_order;
            out.witness["witness_minor_value"] = minors.min_of_order(witness_order);
        } else {
            out.s = static_cast<int>(n);
            out.witness["witness_minor_order"] = -1;
        }
    }
    return out;
}

bool is_m_matrix(const DenseMatrix& a, const Tolerance& tol) {
    if (!is_z_matrix(a, tol)) return false;
    const std::size_t n = a.order();
    const double det = lu_det(a);
    if (std::abs(det) > tol.threshold(std::max(1.0, a.max_abs()))) {
        DenseMatrix inv = lu_inverse(a);
        const double thr = tol.threshold(inv.max_abs());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (inv(i, j) < -thr) return false;
        return true;
    }
    return ls_classify_by_definition(a, tol).s == static_cast<int>(n);
}

std::size_t tn_default_order(std::size_t n) { return n <= 8 ? n : 5; }

bool is_totally_nonnegative(const DenseMatrix& m, std::size_t max_order, const Tolerance& tol,
                            std::size_t budget) {
    const std::size_t n = m.order();
    max_order = std::min(max_order, n);
    std::uint64_t count = 0;
    for (std::size_t k = 1; k <= max_order; ++k) {
        const std::uint64_t c = binomial(n, k);
        count += c * c;
        if (count > budget) throw SizeLimit("is_totally_nonnegative: minor budget exceeded");
    }
    const double thr = tol.threshold(m.max_abs());
    for (std::size_t k = 1; k <= max_order; ++k) {
        bool ok = true;
        for_each_combination(n, k, [&](const std::vector<std::size_t>& rows) {
            if (!ok) return;
            for_each_combination(n, k, [&](const std::vector<std::size_t>& cols) {
                if (!ok) return;
                if (lu_det(m.submatrix(rows, cols)) < -thr) ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace ztri
