#include "ztri/ultrametric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "ztri/green.hpp"
#include "ztri/oracle.hpp"

namespace ztri {

namespace {

bool approx(double x, double y, double thr) { return std::abs(x - y) <= thr; }

}  // namespace

GumCheck is_generalized_ultrametric(const DenseMatrix& c, const Tolerance& tol) {
    const std::size_t n = c.order();
    const double thr = tol.threshold(c.max_abs());
    GumCheck out;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c(i, j) < -thr) {
                out.failed_condition = 1;
                return out;
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (c(i, i) < std::max(c(i, j), c(j, i)) - thr) {
                out.failed_condition = 2;
                return out;
            }

    auto labeling_ok = [&](std::size_t i, std::size_t j, std::size_t k) {
        return approx(c(i, j), c(i, k), thr) && approx(c(j, i), c(k, i), thr) &&
               std::min(c(j, k), c(k, j)) >= std::min(c(j, i), c(i, j)) - thr &&
               std::max(c(j, k), c(k, j)) >= std::max(c(j, i), c(i, j)) - thr;
    };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            for (std::size_t r = q + 1; r < n; ++r) {
                bool any = false;
                const std::size_t perms[6][3] = {{p, q, r}, {p, r, q}, {q, p, r},
                                                 {q, r, p}, {r, p, q}, {r, q, p}};
                for (const auto& pm : perms)
                    if (labeling_ok(pm[0], pm[1], pm[2])) {
                        any = true;
                        break;
                    }
                if (!any) {
                    out.failed_condition = 3;
                    out.triple = {p + 1, q + 1, r + 1};
                    return out;
                }
            }
    out.ok = true;
    return out;
}

namespace {

// G-cyclops test at one eye: the defining parameter inequalities plus
// nonsingularity of the bridge.
bool g_cyclops_conditions(const CyclopsParams& p, const Tolerance& tol) {
    const std::size_t m = p.m;
    if (m < 1 || m >= p.order()) return false;
    double s = std::max(std::abs(p.b1), std::abs(p.b2));
    for (double v : p.a) s = std::max(s, std::abs(v));
    const double thr = tol.threshold(std::max(1.0, s));
    const double am = p.a[m - 1], am1 = p.a[m];
    if (std::min(p.b1, p.b2) <= thr) return false;
    if (std::min(am, am1) < std::max(p.b1, p.b2) - thr) return false;
    return std::abs(am * am1 - p.b1 * p.b2) > thr;
}

}  // namespace

GCyclopsResult is_g_cyclops(const DenseMatrix& c, const Tolerance& tol) {
    GCyclopsResult out;
    for (std::size_t m = 1; m + 1 <= c.order(); ++m) {
        auto p = cyclops_match_eye(c, m, tol);
        if (p && g_cyclops_conditions(*p, tol)) {
            out.ok = true;
            out.params = std::move(p);
            return out;
        }
    }
    return out;
}

EquivalenceReport gum_tridiagonal_inverse_equivalences(const DenseMatrix& c,
                                                       const Tolerance& tol) {
    const std::size_t n = c.order();
    if (std::abs(lu_det(c)) <= tol.threshold(std::max(1.0, c.max_abs())))
        throw SingularMatrix("gum_tridiagonal_inverse_equivalences: singular input");
    if (!is_irreducible(c, tol))
        throw Reducible("gum_tridiagonal_inverse_equivalences: reducible input");

    const DenseMatrix a = lu_inverse(c);
    const double athr = tol.threshold(a.max_abs());
    const bool a_tridiag = is_tridiagonal(a, tol);

    EquivalenceReport rep;
    {
        bool ok = a_tridiag && is_irreducible(a, tol) && is_m_matrix(a, tol);
        if (ok) {
            for (std::size_t i = 0; i < n && ok; ++i) {
                double row = 0.0, col = 0.0;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i) {
                        row += std::abs(a(i, j));
                        col += std::abs(a(j, i));
                    }
                if (std::abs(a(i, i)) < row - athr || std::abs(a(i, i)) < col - athr) ok = false;
            }
        }
        if (ok) {
            // Nonzero row/col sums confined to a consecutive pair {m, m+1}.
            const auto rows = a.row_sums();
            const auto cols = a.col_sums();
            std::size_t lo = n, hi = 0;
            bool any = false;
            for (std::size_t i = 0; i < n; ++i)
                if (std::abs(rows[i]) > athr || std::abs(cols[i]) > athr) {
                    lo = std::min(lo, i);
                    hi = std::max(hi, i);
                    any = true;
                }
            if (!any || hi - lo > 1) ok = false;
        }
        rep.inverse_structure = ok;
    }
    rep.g_cyclops = is_g_cyclops(c, tol).ok;
    const bool gum = is_generalized_ultrametric(c, tol).ok;
    rep.gum_tridiagonal_inverse = gum && a_tridiag;
    rep.gum_totally_nonnegative = gum && is_totally_nonnegative(c, tn_default_order(n), tol);
    rep.all_equal = rep.inverse_structure == rep.g_cyclops &&
                    rep.g_cyclops == rep.gum_tridiagonal_inverse &&
                    rep.gum_tridiagonal_inverse == rep.gum_totally_nonnegative;
    return rep;
}

namespace {

// Strongly connected components of the nonzero-pattern graph, Kosaraju.
std::vector<std::vector<std::size_t>> pattern_sccs(const DenseMatrix& m, double thr) {
    const std::size_t n = m.order();
    std::vector<std::size_t> order;
    std::vector<char> seen(n, 0);
    std::function<void(std::size_t, bool)> dfs = [&](std::size_t u, bool rev) {
        seen[u] = 1;
        for (std::size_t v = 0; v < n; ++v) {
            if (seen[v] || v == u) continue;
            const double w = rev ? m(v, u) : m(u, v);
            if (std::abs(w) > thr) dfs(v, rev);
        }
        if (!rev) order.push_back(u);
    };
    for (std::size_t u = 0; u < n; ++u)
        if (!seen[u]) dfs(u, false);
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<std::vector<std::size_t>> sccs;
    std::vector<std::size_t> stack;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (seen[*it]) continue;
        // collect one reverse-reachable component
        std::vector<std::size_t> comp;
        stack = {*it};
        seen[*it] = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (std::size_t v = 0; v < n; ++v)
                if (!seen[v] && v != u && std::abs(m(v, u)) > thr) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        sccs.push_back(std::move(comp));
    }
    return sccs;
}

std::vector<std::vector<std::size_t>> undirected_components(const DenseMatrix& m, double thr) {
    const std::size_t n = m.order();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (std::size_t v = 0; v < n; ++v)
                if (!seen[v] && v != u &&
                    (std::abs(m(u, v)) > thr || std::abs(m(v, u)) > thr)) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<std::size_t> range_indices(std::size_t begin, std::size_t end) {
    std::vector<std::size_t> idx(end - begin);
    for (std::size_t i = begin; i < end; ++i) idx[i - begin] = i;
    return idx;
}

// 1x1 positive scalars count as degenerate G-cyclopses in block roles.
bool g_cyclops_or_scalar(const DenseMatrix& m, double thr, const Tolerance& tol,
                         std::optional<CyclopsParams>* params_out = nullptr) {
    if (m.order() == 1) {
        if (m(0, 0) <= thr) return false;
        if (params_out) *params_out = CyclopsParams{0, {m(0, 0)}, 0.0, 0.0};
        return true;
    }
    GCyclopsResult r = is_g_cyclops(m, tol);
    if (r.ok && params_out) *params_out = r.params;
    return r.ok;
}

GumCertificate attempt_block_form(const DenseMatrix& b, bool transposed, const Tolerance& tol) {
    const std::size_t n = b.order();
    const double thr = tol.threshold(b.max_abs());
    GumCertificate fail;
    fail.kind = GumCertificate::Kind::not_gum;

    auto sccs = pattern_sccs(b, thr);
    std::sort(sccs.begin(), sccs.end());
    for (const auto& comp : sccs)
        if (comp.back() - comp.front() + 1 != comp.size()) {
            fail.detail = "strongly connected components are not contiguous index ranges";
            return fail;
        }
    const std::size_t m = sccs.size();
    if (m < 2) {
        fail.detail = "irreducible after all";
        return fail;
    }

    BlockFormCertificate cert;
    cert.transposed = transposed;
    for (const auto& comp : sccs) cert.blocks.emplace_back(comp.front(), comp.back() + 1);
    cert.roles.assign(m, BlockRole::g_cyclops);
    cert.g_values.assign(m, std::numeric_limits<double>::quiet_NaN());
    cert.flat.assign(m, std::vector<double>(m, 0.0));

    // Must be block upper triangular.
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < s; ++t)
            for (std::size_t i = cert.blocks[s].first; i < cert.blocks[s].second; ++i)
                for (std::size_t j = cert.blocks[t].first; j < cert.blocks[t].second; ++j)
                    if (std::abs(b(i, j)) > thr) {
                        fail.detail = "nonzero entry below the block diagonal";
                        return fail;
                    }

    // Diagonal blocks.
    for (std::size_t s = 0; s < m; ++s) {
        const auto [lo, hi] = cert.blocks[s];
        const std::size_t sz = hi - lo;
        const DenseMatrix blk = b.principal_submatrix(range_indices(lo, hi));
        if (s == 0) {
            if (!g_cyclops_or_scalar(blk, thr, tol)) {
                fail.detail = "first diagonal block is not a G-cyclops";
                return fail;
            }
            const double f = blk(0, sz - 1);
            for (std::size_t i = 0; i < sz; ++i)
                if (!approx(blk(i, sz - 1), f, thr)) {
                    fail.detail = "first block's last column is not constant";
                    return fail;
                }
            cert.flat[0][0] = f;
        } else if (s + 1 == m) {
            if (!g_cyclops_or_scalar(blk, thr, tol)) {
                fail.detail = "last diagonal block is not a G-cyclops";
                return fail;
            }
            const double f = blk(0, 0);
            for (std::size_t j = 0; j < sz; ++j)
                if (!approx(blk(0, j), f, thr)) {
                    fail.detail = "last block's first row is not constant";
                    return fail;
                }
            cert.flat[s][s] = f;
        } else {
            if (sz == 1) {
                if (blk(0, 0) <= thr) {
                    fail.detail = "middle scalar block is not positive";
                    return fail;
                }
                cert.roles[s] = BlockRole::scalar;
                cert.flat[s][s] = blk(0, 0);
            } else if (sz == 2) {
                const double f = blk(0, 0), g = blk(1, 0);
                if (!approx(blk(0, 1), f, thr) || !approx(blk(1, 1), f, thr)) {
                    fail.detail = "middle 2x2 block is not of the lower-perturbed flat form";
                    return fail;
                }
                if (!(g > thr) || !(g < f - thr)) {
                    fail.detail = "middle 2x2 block needs 0 < g < f";
                    return fail;
                }
                cert.roles[s] = BlockRole::flat_2x2;
                cert.flat[s][s] = f;
                cert.g_values[s] = g;
            } else {
                fail.detail = "middle diagonal block larger than 2x2";
                return fail;
            }
        }
    }

    // Off-diagonal blocks must be flat.
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = s + 1; t < m; ++t) {
            const double f = b(cert.blocks[s].first, cert.blocks[t].first);
            for (std::size_t i = cert.blocks[s].first; i < cert.blocks[s].second; ++i)
                for (std::size_t j = cert.blocks[t].first; j < cert.blocks[t].second; ++j)
                    if (!approx(b(i, j), f, thr)) {
                        fail.detail = "off-diagonal block is not flat";
                        return fail;
                    }
            cert.flat[s][t] = f;
        }

    // Pivot q (1-based block index), smallest valid one.
    auto f_at = [&](std::size_t s, std::size_t t) { return cert.flat[s][t]; };
    for (std::size_t q = 1; q <= m - 1; ++q) {
        bool ok = f_at(q - 1, q - 1) > thr && f_at(q, q) > thr;
        for (std::size_t s = 0; ok && s + 1 < q; ++s)
            if (f_at(s, s) < f_at(s + 1, s + 1) - thr) ok = false;
        for (std::size_t s = q; ok && s + 1 < m; ++s)
            if (f_at(s, s) > f_at(s + 1, s + 1) + thr) ok = false;
        // column equality chains in the head
        for (std::size_t t = 1; ok && t < q; ++t)
            for (std::size_t s = 0; ok && s < t; ++s)
                if (!approx(f_at(s, t), f_at(t, t), thr)) ok = false;
        // row equality chains in the tail
        for (std::size_t s = q; ok && s + 1 < m; ++s)
            for (std::size_t t = s + 1; ok && t < m; ++t)
                if (!approx(f_at(s, t), f_at(s, s), thr)) ok = false;
        // cross blocks all share f_{q,q+1}
        const double fc = f_at(q - 1, q);
        if (ok && (!(fc > thr) || fc > std::min(f_at(q - 1, q - 1), f_at(q, q)) + thr)) ok = false;
        for (std::size_t s = 0; ok && s < q; ++s)
            for (std::size_t t = q; ok && t < m; ++t)
                if (!approx(f_at(s, t), fc, thr)) ok = false;
        if (ok) {
            cert.q = q;
            GumCertificate out;
            out.kind = GumCertificate::Kind::block_form;
            out.block_form = std::move(cert);
            out.indices = range_indices(0, n);
            return out;
        }
    }
    fail.detail = "no valid pivot block q";
    return fail;
}

}  // namespace

GumCertificate recognize_block_form(const DenseMatrix& c, const Tolerance& tol) {
    const double thr = tol.threshold(c.max_abs());
    if (std::abs(lu_det(c)) <= tol.threshold(std::max(1.0, c.max_abs())))
        throw SingularMatrix("recognize_block_form: singular input");
    if (undirected_components(c, thr).size() > 1)
        throw WrongReducibilityClass("recognize_block_form: completely reducible input");
    if (is_irreducible(c, tol))
        throw WrongReducibilityClass("recognize_block_form: irreducible input");

    GumCertificate first = attempt_block_form(c, false, tol);
    if (first.kind == GumCertificate::Kind::block_form) return first;
    GumCertificate second = attempt_block_form(c.transpose(), true, tol);
    if (second.kind == GumCertificate::Kind::block_form) return second;
    return first;
}

GumCertificate gum_decompose(const DenseMatrix& c, const Tolerance& tol) {
    if (std::abs(lu_det(c)) <= tol.threshold(std::max(1.0, c.max_abs())))
        throw SingularMatrix("gum_decompose: singular input");
    const double thr = tol.threshold(c.max_abs());

    GumCertificate out;
    out.kind = GumCertificate::Kind::direct_sum;
    for (auto& comp : undirected_components(c, thr)) {
        const DenseMatrix blk = c.principal_submatrix(comp);
        GumCertificate part;
        part.indices = comp;
        if (is_irreducible(blk, tol)) {
            std::optional<CyclopsParams> params;
            if (g_cyclops_or_scalar(blk, tol.threshold(blk.max_abs()), tol, &params)) {
                part.kind = GumCertificate::Kind::g_cyclops;
                part.cyclops = std::move(params);
            } else {
                out.kind = GumCertificate::Kind::not_gum;
                out.detail = "component is irreducible but not a G-cyclops";
                out.indices = comp;
                return out;
            }
        } else {
            GumCertificate sub = recognize_block_form(blk, tol);
            if (sub.kind != GumCertificate::Kind::block_form) {
                out.kind = GumCertificate::Kind::not_gum;
                out.detail = "component fails the block form: " + sub.detail;
                out.indices = comp;
                return out;
            }
            part.kind = GumCertificate::Kind::block_form;
            part.block_form = std::move(sub.block_form);
        }
        out.components.push_back(std::move(part));
    }
    if (out.components.size() == 1) return std::move(out.components.front());
    return out;
}

}  // namespace ztri
