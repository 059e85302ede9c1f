#include "ztri/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ztri/cyclops.hpp"
#include "ztri/green.hpp"
#include "ztri/io.hpp"
#include "ztri/oracle.hpp"
#include "ztri/type_d.hpp"

namespace ztri {

namespace {

constexpr double kMargin = 0.1;

using Rng = std::mt19937_64;

double uni(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

TypeDParams gen_type_d(Rng& rng, std::size_t n) {
    TypeDParams p;
    p.params.resize(n);
    double a = uni(rng, kMargin, 3.0) * (pick(rng, 0, 1) ? 1.0 : -1.0);
    for (std::size_t i = 0; i < n; ++i) {
        p.params[i] = a;
        a += uni(rng, kMargin, 2.0);
    }
    if (pick(rng, 0, 1)) {
        p.flipped = true;
        std::reverse(p.params.begin(), p.params.end());
    }
    return p;
}

GreenFactors gen_green_z(Rng& rng, std::size_t n) {
    // b_i > 0 and strictly increasing ratios a_i/b_i give h_i > 0; ratio gaps
    // of 0.5 with b_i >= 0.5 keep every h_i above the margin.
    GreenFactors f;
    f.b.resize(n);
    f.a.resize(n);
    for (auto& b : f.b) b = uni(rng, 0.5, 3.0);
    double r = uni(rng, -3.0, 3.0);
    if (std::abs(r) < 0.2) r = r < 0 ? -0.2 : 0.2;
    for (std::size_t i = 0; i < n; ++i) {
        f.a[i] = r * f.b[i];
        r += uni(rng, 0.5, 2.0);
    }
    if (pick(rng, 0, 2) == 0) {
        f.d.resize(n);
        for (auto& d : f.d) d = uni(rng, 0.5, 2.0);
    }
    return f;
}

GreenFactors gen_green_m(Rng& rng, std::size_t n) {
    GreenFactors f;
    f.b.resize(n);
    f.a.resize(n);
    for (auto& b : f.b) b = uni(rng, 0.5, 3.0);
    double r = uni(rng, kMargin, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        f.a[i] = r * f.b[i];
        r += uni(rng, 0.5, 2.0);
    }
    return f;
}

CyclopsParams gen_cyclops_chains(Rng& rng, std::size_t n, std::size_t m,
                                 double am, double am1) {
    CyclopsParams p;
    p.m = m;
    p.a.resize(n);
    p.a[m - 1] = am;
    for (std::size_t i = m - 1; i-- > 0;) p.a[i] = p.a[i + 1] + uni(rng, kMargin, 2.0);
    p.a[m] = am1;
    for (std::size_t i = m + 1; i < n; ++i) p.a[i] = p.a[i - 1] + uni(rng, kMargin, 2.0);
    return p;
}

CyclopsParams gen_cyclops_z(Rng& rng, std::size_t n) {
    if (n < 2) throw InfeasibleSize("cyclops_z needs n >= 2");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const std::size_t m = pick(rng, 1, n - 1);
        const double am = uni(rng, 0.5, 3.0), am1 = uni(rng, 0.5, 3.0);
        CyclopsParams p = gen_cyclops_chains(rng, n, m, am, am1);
        const double prod = am * am1;
        if (pick(rng, 0, 1)) {
            // bridge positive, off-entries positive below the geometric mean
            p.b1 = uni(rng, kMargin, std::sqrt(prod));
            p.b2 = uni(rng, kMargin, std::max(kMargin * 2, (prod - kMargin) / p.b1));
        } else {
            // bridge negative, off-entries negative with product above a_m a_{m+1}
            p.b1 = -uni(rng, 0.5, 3.0);
            p.b2 = -(prod + kMargin + uni(rng, 0.0, 1.0)) / -p.b1;
        }
        if (std::abs(am * am1 - p.b1 * p.b2) < kMargin) continue;
        if (!cyclops_inverse_is_z(p)) continue;
        return p;
    }
    throw DomainError("cyclops_z generator failed to converge");
}

CyclopsParams gen_g_cyclops(Rng& rng, std::size_t n) {
    if (n < 2) throw InfeasibleSize("g_cyclops needs n >= 2");
    const std::size_t m = pick(rng, 1, n - 1);
    CyclopsParams p;
    const double b1 = uni(rng, kMargin, 2.0), b2 = uni(rng, kMargin, 2.0);
    const double base = std::max(b1, b2) + kMargin;
    p = gen_cyclops_chains(rng, n, m, base + uni(rng, 0.0, 2.0), base + uni(rng, 0.0, 2.0));
    p.b1 = b1;
    p.b2 = b2;
    return p;
}

// Block upper triangular ultrametric form. Diagonal blocks realize the three
// allowed roles; flat off-diagonal values follow the column/row equality
// chains around a pivot block q.
struct BlockPlan {
    std::vector<std::size_t> sizes;
    std::size_t q = 1;  // 1-based pivot block
};

DenseMatrix gen_gum_block(Rng& rng, std::size_t n, nlohmann::json& params) {
    if (n < 4) throw InfeasibleSize("gum_block needs n >= 4");
    BlockPlan plan;
    {
        const std::size_t first = pick(rng, 1, n - 3), last = pick(rng, 1, n - 2 - first);
        std::size_t rem = n - first - last;
        plan.sizes.push_back(first);
        while (rem > 0) {
            const std::size_t s = pick(rng, 1, std::min<std::size_t>(2, rem));
            plan.sizes.push_back(s);
            rem -= s;
        }
        plan.sizes.push_back(last);
        plan.q = pick(rng, 1, plan.sizes.size() - 1);
    }
    const std::size_t m = plan.sizes.size();

    // Flat diagonal values: decreasing head f_11 >= ... >= f_qq, increasing
    // tail f_{q+1,q+1} <= ... <= f_mm, cross value below both pivots.
    const double fc = uni(rng, 0.5, 1.5);
    std::vector<double> f(m);
    f[plan.q - 1] = fc + kMargin + uni(rng, 0.0, 1.0);
    for (std::size_t s = plan.q - 1; s-- > 0;) f[s] = f[s + 1] + uni(rng, kMargin, 1.0);
    f[plan.q] = fc + kMargin + uni(rng, 0.0, 1.0);
    for (std::size_t s = plan.q + 1; s < m; ++s) f[s] = f[s - 1] + uni(rng, kMargin, 1.0);

    std::vector<std::size_t> start(m);
    for (std::size_t s = 1; s < m; ++s) start[s] = start[s - 1] + plan.sizes[s - 1];
    DenseMatrix c(n);

    auto fill_flat = [&](std::size_t s, std::size_t t, double v) {
        for (std::size_t i = start[s]; i < start[s] + plan.sizes[s]; ++i)
            for (std::size_t j = start[t]; j < start[t] + plan.sizes[t]; ++j) c(i, j) = v;
    };
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = s + 1; t < m; ++t)
            fill_flat(s, t, s < plan.q && t >= plan.q ? fc : (t < plan.q ? f[t] : f[s]));

    for (std::size_t s = 0; s < m; ++s) {
        const std::size_t lo = start[s], k = plan.sizes[s];
        if (k == 1) {
            c(lo, lo) = f[s];
        } else if (s == 0) {
            // G-cyclops with eye k-1 and constant last column f[0]
            c(lo + k - 1, lo + k - 1) = f[0];
            double a = f[0] + kMargin + uni(rng, 0.0, 1.0);
            for (std::size_t i = k - 1; i-- > 0;) {
                c(lo + i, lo + i) = a;
                a += uni(rng, kMargin, 1.0);
            }
            const double b2 = uni(rng, kMargin, std::min(f[0], c(lo + k - 2, lo + k - 2)) - 0.01);
            for (std::size_t i = 0; i + 1 < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) {
                    c(lo + i, lo + j) = j == k - 1 ? f[0] : c(lo + j, lo + j);
                    c(lo + j, lo + i) = j == k - 1 ? b2 : c(lo + j, lo + j);
                }
        } else if (s + 1 == m) {
            // G-cyclops with eye 1 and constant first row f[m-1]
            c(lo, lo) = f[s];
            double a = f[s] + kMargin + uni(rng, 0.0, 1.0);
            for (std::size_t i = 1; i < k; ++i) {
                c(lo + i, lo + i) = a;
                a += uni(rng, kMargin, 1.0);
            }
            const double b2 = uni(rng, kMargin, f[s] - 0.01);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j) {
                    c(lo + i, lo + j) = i == 0 ? f[s] : c(lo + i, lo + i);
                    c(lo + j, lo + i) = i == 0 ? b2 : c(lo + i, lo + i);
                }
        } else {
            // middle 2x2: [[f, f], [g, f]] with 0 < g < f
            const double g = uni(rng, kMargin, f[s] - kMargin);
            c(lo, lo) = c(lo, lo + 1) = c(lo + 1, lo + 1) = f[s];
            c(lo + 1, lo) = g;
        }
    }

    params = {{"kind", "gum_block"},
              {"sizes", plan.sizes},
              {"q", plan.q},
              {"flat_diag", f},
              {"cross", fc}};
    return c;
}

DenseMatrix embed(DenseMatrix whole, const DenseMatrix& part, std::size_t at) {
    for (std::size_t i = 0; i < part.order(); ++i)
        for (std::size_t j = 0; j < part.order(); ++j) whole(at + i, at + j) = part(i, j);
    return whole;
}

DenseMatrix gen_gum_sum(Rng& rng, std::size_t n, nlohmann::json& params) {
    if (n < 3) throw InfeasibleSize("gum_sum needs n >= 3");
    std::vector<std::size_t> sizes;
    std::size_t rem = n;
    sizes.push_back(pick(rng, 1, n - 1));
    rem -= sizes.back();
    while (rem > 0) {
        sizes.push_back(pick(rng, 1, rem));
        rem -= sizes.back();
    }

    DenseMatrix c(n);
    nlohmann::json comps = nlohmann::json::array();
    std::size_t at = 0;
    for (std::size_t k : sizes) {
        nlohmann::json cp;
        if (k == 1) {
            const double v = uni(rng, 0.5, 3.0);
            c(at, at) = v;
            cp = {{"kind", "scalar"}, {"value", v}};
        } else if (k >= 4 && pick(rng, 0, 1)) {
            nlohmann::json bp;
            c = embed(std::move(c), gen_gum_block(rng, k, bp), at);
            cp = std::move(bp);
        } else {
            CyclopsParams p = gen_g_cyclops(rng, k);
            c = embed(std::move(c), cyclops_build(p), at);
            cp = cyclops_to_json(p);
        }
        cp["offset"] = at + 1;  // 1-based start index of the component
        comps.push_back(std::move(cp));
        at += k;
    }
    params = {{"kind", "gum_sum"}, {"components", std::move(comps)}};
    return c;
}

}  // namespace

GenClass gen_class_from_name(const std::string& name) {
    if (name == "type_d") return GenClass::type_d;
    if (name == "green_z") return GenClass::green_z;
    if (name == "green_m") return GenClass::green_m;
    if (name == "cyclops_z") return GenClass::cyclops_z;
    if (name == "g_cyclops") return GenClass::g_cyclops;
    if (name == "gum_block") return GenClass::gum_block;
    if (name == "gum_sum") return GenClass::gum_sum;
    throw ParseError("unknown generator class '" + name + "'");
}

Generated generate_instance(GenClass cls, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw InfeasibleSize("n must be >= 1");
    Rng rng(seed);
    Generated out;
    switch (cls) {
        case GenClass::type_d: {
            TypeDParams p = gen_type_d(rng, n);
            out.matrix = typed_build(p);
            out.params = typed_to_json(p);
            break;
        }
        case GenClass::green_z: {
            GreenFactors f = gen_green_z(rng, n);
            out.matrix = green_build(f);
            out.params = green_to_json(f);
            break;
        }
        case GenClass::green_m: {
            GreenFactors f = gen_green_m(rng, n);
            out.matrix = green_build(f);
            out.params = green_to_json(f);
            break;
        }
        case GenClass::cyclops_z: {
            CyclopsParams p = gen_cyclops_z(rng, n);
            out.matrix = cyclops_build(p);
            out.params = cyclops_to_json(p);
            break;
        }
        case GenClass::g_cyclops: {
            CyclopsParams p = gen_g_cyclops(rng, n);
            out.matrix = cyclops_build(p);
            out.params = cyclops_to_json(p);
            break;
        }
        case GenClass::gum_block:
            out.matrix = gen_gum_block(rng, n, out.params);
            break;
        case GenClass::gum_sum:
            out.matrix = gen_gum_sum(rng, n, out.params);
            break;
    }
    return out;
}

}  // namespace ztri
