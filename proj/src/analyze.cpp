#include "ztri/analyze.hpp"

#include <cmath>

#include "ztri/cyclops.hpp"
#include "ztri/green.hpp"
#include "ztri/type_d.hpp"

namespace ztri {

namespace {

const char* role_name(BlockRole r) {
    switch (r) {
        case BlockRole::g_cyclops: return "g_cyclops";
        case BlockRole::scalar: return "scalar";
        case BlockRole::flat_2x2: return "flat_2x2";
    }
    return "?";
}

}  // namespace

nlohmann::json ls_to_json(const LsClassification& c) {
    nlohmann::json j{{"s", c.s}, {"det_sign", to_string(c.det_sign)}};
    for (const char* key : {"t", "r", "q"}) j[key] = nullptr;
    for (const auto& [key, value] : c.witness) j[key] = value;
    return j;
}

nlohmann::json gum_certificate_to_json(const GumCertificate& cert) {
    nlohmann::json j;
    switch (cert.kind) {
        case GumCertificate::Kind::g_cyclops: j["kind"] = "g_cyclops"; break;
        case GumCertificate::Kind::block_form: j["kind"] = "block_form"; break;
        case GumCertificate::Kind::direct_sum: j["kind"] = "direct_sum"; break;
        case GumCertificate::Kind::not_gum: j["kind"] = "not_gum"; break;
    }
    if (!cert.indices.empty()) {
        nlohmann::json idx = nlohmann::json::array();
        for (std::size_t i : cert.indices) idx.push_back(i + 1);
        j["indices"] = std::move(idx);
    }
    if (!cert.detail.empty()) j["detail"] = cert.detail;
    if (cert.cyclops) j["cyclops"] = cyclops_to_json(*cert.cyclops);
    if (cert.block_form) {
        const auto& b = *cert.block_form;
        nlohmann::json bf{{"transposed", b.transposed}, {"q", b.q}};
        nlohmann::json blocks = nlohmann::json::array();
        for (const auto& [lo, hi] : b.blocks) blocks.push_back({lo + 1, hi});  // 1-based inclusive
        bf["blocks"] = std::move(blocks);
        nlohmann::json roles = nlohmann::json::array();
        for (BlockRole r : b.roles) roles.push_back(role_name(r));
        bf["roles"] = std::move(roles);
        nlohmann::json flat = nlohmann::json::array();
        for (std::size_t s = 0; s < b.flat.size(); ++s) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t t = 0; t < b.flat.size(); ++t)
                row.push_back(t >= s ? nlohmann::json(b.flat[s][t]) : nlohmann::json(nullptr));
            flat.push_back(std::move(row));
        }
        bf["flat"] = std::move(flat);
        nlohmann::json g = nlohmann::json::array();
        for (std::size_t s = 0; s < b.roles.size(); ++s)
            g.push_back(b.roles[s] == BlockRole::flat_2x2 ? nlohmann::json(b.g_values[s])
                                                          : nlohmann::json(nullptr));
        bf["g_values"] = std::move(g);
        j["block_form"] = std::move(bf);
    }
    if (!cert.components.empty()) {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : cert.components) comps.push_back(gum_certificate_to_json(c));
        j["components"] = std::move(comps);
    }
    return j;
}

nlohmann::json analyze_input(const ParsedInput& in, const AnalyzeOptions& opt) {
    const DenseMatrix& c = in.matrix;
    const std::size_t n = c.order();
    const Tolerance& tol = opt.tol;
    const bool with_oracle = n <= opt.oracle_order_limit;
    bool consistent = true;

    nlohmann::json rep;
    rep["input"] = {{"n", n}, {"source", in.source}};
    rep["structure"] = {
        {"z_matrix", is_z_matrix(c, tol)},
        {"tridiagonal", is_tridiagonal(c, tol)},
        {"irreducible", is_irreducible(c, tol)},
        {"generalized_ultrametric", is_generalized_ultrametric(c, tol).ok},
        {"totally_nonnegative_budgeted",
         is_totally_nonnegative(c, tn_default_order(n), tol, opt.minor_budget)},
    };

    // Recognizer cascade.
    std::string kind = "none";
    nlohmann::json params;
    std::optional<double> closed_det;
    std::optional<TridiagonalMatrix> closed_inv;
    auto try_closed_inv = [&](auto&& fn) {
        try {
            closed_inv = fn();
        } catch (const SingularMatrix&) {
        }
    };
    if (auto td = typed_recognize(c, tol)) {
        kind = "type_d";
        params = typed_to_json(*td);
        closed_det = typed_det(*td);
        try_closed_inv([&] { return typed_inverse(*td, tol); });
    } else if (auto cy = cyclops_recognize(c, tol)) {
        kind = "cyclops";
        params = cyclops_to_json(*cy);
        closed_det = cyclops_det(*cy);
        try_closed_inv([&] { return cyclops_inverse(*cy, tol); });
    } else if (auto gr = green_detect(c, tol); gr.ok()) {
        kind = "green";
        params = green_to_json(*gr.factors);
        closed_det = green_det(*gr.factors);
        try_closed_inv([&] { return green_inverse(*gr.factors, tol); });
    } else {
        try {
            GumCertificate cert = gum_decompose(c, tol);
            if (cert.kind != GumCertificate::Kind::not_gum) {
                kind = "gum";
                params = gum_certificate_to_json(cert);
            }
        } catch (const Error&) {
        }
    }
    rep["recognized"] = {{"kind", kind}, {"params", params.is_null() ? nlohmann::json() : params}};

    // Determinant: closed form against the LU oracle.
    const double det_oracle = lu_det(c);
    {
        nlohmann::json d;
        d["oracle"] = det_oracle;
        if (closed_det) {
            d["closed_form"] = *closed_det;
            const double disc = *closed_det - det_oracle;
            d["discrepancy"] = disc;
            const double scale = std::max({1.0, std::abs(*closed_det), std::abs(det_oracle)});
            if (std::abs(disc) > tol.threshold(scale)) consistent = false;
        } else {
            d["closed_form"] = nullptr;
            d["discrepancy"] = nullptr;
        }
        rep["determinant"] = std::move(d);
    }

    // Inverse: closed-form band, cross-checked against the dense oracle.
    const double det_thr = tol.threshold(std::max(1.0, c.max_abs()));
    const bool nonsingular = std::abs(det_oracle) > det_thr;
    {
        nlohmann::json inv;
        if (closed_inv) {
            inv["band"] = band_to_json(*closed_inv);
            if (with_oracle && nonsingular) {
                const DenseMatrix dense = lu_inverse(c);
                const DenseMatrix closed = to_dense(*closed_inv);
                double dev = 0.0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        dev = std::max(dev, std::abs(dense(i, j) - closed(i, j)));
                inv["max_deviation_from_oracle"] = dev;
                // LU and the closed forms round off differently; allow a
                // looser band than the structural tolerance.
                if (dev > 1e-8 * std::max(1.0, dense.max_abs())) consistent = false;
            }
        } else {
            inv["band"] = nullptr;
        }
        rep["inverse"] = std::move(inv);
    }

    // Certificate for "inverse of an irreducible tridiagonal Z-matrix".
    {
        nlohmann::json z;
        try {
            InverseTridiagonalZResult r = is_inverse_tridiagonal_z(c, tol);
            z["ok"] = r.ok;
            if (r.ok) {
                z["green"] = green_to_json(*r.factors);
                z["h"] = r.h->values;
                z["ls"] = ls_to_json(green_predict_ls(*r.factors, tol));
            }
        } catch (const Error& e) {
            z["ok"] = false;
            z["error"] = e.what();
        }
        rep["inverse_tridiagonal_z"] = std::move(z);
    }

    // L_s classification of C^{-1}: prediction from the recognized
    // parameters, oracles from the dense inverse.
    {
        nlohmann::json ls;
        std::vector<int> s_values;
        std::optional<LsClassification> predicted;
        try {
            if (kind == "cyclops") {
                CyclopsParams p;
                p.m = params.at("m").get<std::size_t>();
                p.a = params.at("a").get<std::vector<double>>();
                p.b1 = params.at("b1").get<double>();
                p.b2 = params.at("b2").get<double>();
                predicted = cyclops_predict_ls(p, tol);
            } else if (rep["inverse_tridiagonal_z"]["ok"].get<bool>()) {
                GreenFactors f;
                f.a = rep["inverse_tridiagonal_z"]["green"].at("a").get<std::vector<double>>();
                f.b = rep["inverse_tridiagonal_z"]["green"].at("b").get<std::vector<double>>();
                predicted = green_predict_ls(f, tol);
            }
        } catch (const Error&) {
        }
        if (predicted) {
            ls["predicted"] = ls_to_json(*predicted);
            s_values.push_back(predicted->s);
        } else {
            ls["predicted"] = nullptr;
        }
        if (with_oracle && nonsingular) {
            try {
                const DenseMatrix a = lu_inverse(c);
                if (is_z_matrix(a, tol)) {
                    LsClassification def = ls_classify_by_definition(a, tol, opt.minor_budget);
                    LsClassification min = ls_classify_by_minor_signs(a, tol, opt.minor_budget);
                    ls["oracle_definition"] = ls_to_json(def);
                    ls["oracle_minor_signs"] = ls_to_json(min);
                    s_values.push_back(def.s);
                    s_values.push_back(min.s);
                } else {
                    ls["oracle_definition"] = nullptr;
                    ls["oracle_minor_signs"] = nullptr;
                    ls["note"] = "inverse is not a Z-matrix; no class assigned";
                }
            } catch (const Error& e) {
                ls["note"] = e.what();
            }
        }
        bool agree = true;
        for (int s : s_values)
            if (s != s_values.front()) agree = false;
        ls["agreement"] = s_values.empty() ? nlohmann::json(nullptr) : nlohmann::json(agree);
        if (!s_values.empty() && !agree) consistent = false;
        rep["ls"] = std::move(ls);
    }

    rep["consistent"] = consistent;
    return rep;
}

}  // namespace ztri
