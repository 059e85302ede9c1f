// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// Exit status is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "ztri/analyze.hpp"
#include "ztri/generate.hpp"
#include "ztri/green.hpp"
#include "ztri/oracle.hpp"
#include "ztri/type_d.hpp"
#include "ztri/ultrametric.hpp"

using namespace ztri;
using namespace ztri::testing;

namespace {

int failures = 0;

void report(int number, const char* title, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool close(double x, double y, double rel) {
    return std::abs(x - y) <= rel * std::max({1.0, std::abs(x), std::abs(y)});
}

// factors describe the same green matrix up to a positive scalar on a
// (absorbed inversely by b)
bool proportional(const std::vector<double>& got, const std::vector<double>& want) {
    if (got.size() != want.size()) return false;
    double scale = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(want[i]) > 1e-12) {
            scale = got[i] / want[i];
            break;
        }
    if (scale == 0.0) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i] - scale * want[i]) > 1e-7 * std::max(1.0, std::abs(scale)))
            return false;
    return true;
}

void criterion_1() {
    bool ok = true;
    std::string why;
    const DenseMatrix c = fixture_l1_green();
    const auto z = is_inverse_tridiagonal_z(c);
    ok = z.ok && proportional(z.factors->a, {-2, -1, 2, 3}) &&
         proportional(z.factors->b, {1, 1, 1, 1});
    if (!ok) why = "green factors not recovered";
    if (ok) {
        const auto p = green_predict_ls(*z.factors);
        const auto d = ls_classify_by_definition(lu_inverse(c));
        ok = p.witness.at("t") == 6 && p.witness.at("r") == 1 && p.s == 1 && d.s == 1;
        if (!ok) why = "classification mismatch";
    }
    if (ok && !close(lu_det(c), -6.0, 1e-9)) {
        ok = false;
        why = "determinant";
    }
    report(1, "4x4 negative-determinant green matrix: factors, t, r, class, det", ok, why);
}

void criterion_2() {
    bool ok = true;
    std::string why;
    const DenseMatrix c = fixture_l1_green_scaled();
    const auto z = is_inverse_tridiagonal_z(c);
    ok = z.ok && proportional(z.factors->a, {-4, -2, 4, 5}) &&
         proportional(z.factors->b, {6, 5, 4, 1});
    if (!ok) why = "green factors not recovered";
    if (ok && !close(lu_det(c), -14336.0, 1e-9)) {
        ok = false;
        why = "determinant";
    }
    if (ok) {
        const auto p = green_predict_ls(*z.factors);
        const auto d = ls_classify_by_definition(lu_inverse(c));
        const auto m = ls_classify_by_minor_signs(lu_inverse(c));
        // the oracle value is the acceptance condition; the historically
        // printed alternative class for this matrix is recorded as a known
        // discrepancy outside the code base
        ok = p.witness.at("r") == 1 && d.s == 1 && m.s == 1 && p.s == 1;
        if (!ok) why = "class is not the oracle value 1";
    }
    report(2, "4x4 scaled green matrix: factors, r, oracle class s=1, det", ok, why);
}

void criterion_3() {
    bool ok = true;
    std::string why;
    const auto rec = cyclops_recognize(fixture_cyclops());
    ok = rec && rec->m == 3 && rec->a == std::vector<double>{4, 3, 2, 1, 2, 3} &&
         rec->b1 == -1.0 && rec->b2 == -4.0;
    if (!ok) why = "recognition";
    if (ok && std::abs(cyclops_det(*rec) + 2.0) > 1e-12) {
        ok = false;
        why = "determinant";
    }
    if (ok && max_diff(to_dense(cyclops_inverse(*rec)), fixture_cyclops_inverse()) > 1e-12) {
        ok = false;
        why = "inverse entries";
    }
    if (ok) {
        const auto sums = cyclops_row_col_sums(*rec);
        for (std::size_t i = 0; i < 6 && ok; ++i)
            if (i != 2 && i != 3)
                ok = std::abs(sums.rows[i]) <= 1e-12 && std::abs(sums.cols[i]) <= 1e-12;
        if (!ok) why = "row/col sums";
    }
    if (ok) {
        const auto p = cyclops_predict_ls(*rec);
        const auto a = lu_inverse(fixture_cyclops());
        ok = p.witness.at("y") == 3 && p.witness.at("r") == 3 && p.witness.at("t") == 3 &&
             p.s == 1 && ls_classify_by_definition(a).s == 1 &&
             ls_classify_by_minor_signs(a).s == 1;
        if (!ok) why = "classification";
    }
    report(3, "6x6 cyclops: params, det, inverse, confined sums, class", ok, why);
}

void criterion_4() {
    bool ok = true;
    std::string why;
    const DenseMatrix c = fixture_block_gum();
    if (!is_generalized_ultrametric(c).ok) {
        ok = false;
        why = "ultrametric predicate";
    }
    if (ok) {
        const DenseMatrix a = lu_inverse(c);
        ok = is_tridiagonal(a, Tolerance{1e-8, 1e-8}) && is_m_matrix(a);
        if (!ok) why = "inverse not a tridiagonal M-matrix";
    }
    if (ok && recognize_block_form(c).kind != GumCertificate::Kind::block_form) {
        ok = false;
        why = "block form certificate";
    }
    if (ok && !is_totally_nonnegative(c, 5, Tolerance{1e-8, 1e-8})) {
        ok = false;
        why = "total nonnegativity to order 5";
    }
    report(4, "12x12 reducible ultrametric matrix: predicate, inverse, certificate, TN", ok, why);
}

void criterion_5() {
    Rng rng(1001);
    int bad = 0;
    auto check = [&](double closed, double oracle) {
        if (!close(closed, oracle, 1e-9)) ++bad;
    };
    for (int it = 0; it < 1000; ++it) {
        const TypeDParams td = random_type_d(rng, pick(rng, 1, 10));
        check(typed_det(td), lu_det(typed_build(td)));

        const GreenFactors f = random_green_z(rng, pick(rng, 1, 10), pick(rng, 0, 1) == 0);
        check(green_det(f), lu_det(green_build(f)));

        const std::size_t n = pick(rng, 2, 10);
        CyclopsParams cy = random_cyclops(rng, n, uni(rng, -1, 1), uni(rng, -1, 1));
        if (it % 3 == 1) cy = random_cyclops(rng, n, 0.0, uni(rng, -1, 1));
        if (it % 3 == 2) cy = random_cyclops(rng, n, 0.0, 0.0);
        check(cyclops_det(cy), lu_det(cyclops_build(cy)));
    }
    report(5, "1000 closed-form determinants per family vs LU (incl. zero eye params)", bad == 0,
           bad ? std::to_string(bad) + " mismatches" : "");
}

void criterion_6() {
    Rng rng(1003);
    int bad = 0;
    for (int it = 0; it < 500; ++it) {
        const TypeDParams td = random_type_d(rng, pick(rng, 1, 9));
        if (max_diff(typed_build(td).multiply(to_dense(typed_inverse(td))),
                     DenseMatrix::identity(td.order())) > 1e-8)
            ++bad;

        const std::size_t gn = pick(rng, 1, 9);
        const GreenFactors f = random_green_z(rng, gn);
        const TridiagonalMatrix inv = green_inverse(f);
        if (max_diff(green_build(f).multiply(to_dense(inv)), DenseMatrix::identity(gn)) > 1e-8)
            ++bad;
        const HSequence h = h_sequence(f);
        for (std::size_t i = 0; i + 1 < gn; ++i)
            if (!close(inv.superdiag[i], -1.0 / h.values[i], 1e-9)) ++bad;

        CyclopsParams cy = random_cyclops(rng, pick(rng, 2, 9), uni(rng, 0.3, 2), uni(rng, 0.3, 2));
        if (std::abs(cy.a[cy.m - 1] * cy.a[cy.m] - cy.b1 * cy.b2) < 0.05) continue;
        if (max_diff(cyclops_build(cy).multiply(to_dense(cyclops_inverse(cy))),
                     DenseMatrix::identity(cy.order())) > 1e-8)
            ++bad;
    }
    report(6, "500 closed-form inverses per family; superdiagonal h identity", bad == 0,
           bad ? std::to_string(bad) + " mismatches" : "");
}

void criterion_7() {
    Rng rng(1009);
    int bad = 0, done = 0;
    while (done < 500) {
        const GreenFactors f = random_green_z(rng, pick(rng, 3, 7));
        const DenseMatrix c = green_build(f);
        if (std::abs(lu_det(c)) < 1e-6) continue;
        const DenseMatrix a = lu_inverse(c);
        const int p = green_predict_ls(f).s;
        if (p != ls_classify_by_definition(a).s || p != ls_classify_by_minor_signs(a).s) ++bad;
        ++done;
    }
    done = 0;
    while (done < 500) {
        const std::size_t n = pick(rng, 3, 7);
        const Generated g = generate_instance(GenClass::cyclops_z, n, rng());
        CyclopsParams cy;
        cy.m = g.params.at("m").get<std::size_t>();
        cy.a = g.params.at("a").get<std::vector<double>>();
        cy.b1 = g.params.at("b1").get<double>();
        cy.b2 = g.params.at("b2").get<double>();
        if (std::abs(lu_det(g.matrix)) < 1e-6) continue;
        const DenseMatrix a = lu_inverse(g.matrix);
        const int p = cyclops_predict_ls(cy).s;
        if (p != ls_classify_by_definition(a).s || p != ls_classify_by_minor_signs(a).s) ++bad;
        ++done;
    }
    report(7, "class predictor vs both oracles, 500 green + 500 cyclops instances", bad == 0,
           bad ? std::to_string(bad) + " disagreements" : "");
}

void criterion_8() {
    Rng rng(1013);
    int bad = 0, pos = 0, neg = 0;
    while (pos < 300 || neg < 300) {
        const std::size_t n = pick(rng, 2, 7);
        Generated g = generate_instance(GenClass::g_cyclops, n, rng());
        const bool perturb = neg < 300 && (pos >= 300 || pick(rng, 0, 1));
        if (perturb) {
            CyclopsParams p;
            p.m = g.params.at("m").get<std::size_t>();
            p.a = g.params.at("a").get<std::vector<double>>();
            p.b1 = -g.params.at("b1").get<double>();
            p.b2 = -g.params.at("b2").get<double>();
            if (std::abs(p.a[p.m - 1] * p.a[p.m] - p.b1 * p.b2) < 0.05) continue;
            g.matrix = cyclops_build(p);
        }
        const EquivalenceReport rep = gum_tridiagonal_inverse_equivalences(g.matrix);
        if (!rep.all_equal || rep.g_cyclops == perturb) ++bad;
        (perturb ? neg : pos)++;
    }
    report(8, "four-way equivalence on 300 positives and 300 perturbed negatives", bad == 0,
           bad ? std::to_string(bad) + " breaks" : "");
}

void criterion_9() {
    Rng rng(1019);
    int bad = 0;
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = pick(rng, 3, 12);
        const Generated g = generate_instance(GenClass::gum_sum, n, rng());
        const GumCertificate cert = gum_decompose(g.matrix);
        if (cert.kind != GumCertificate::Kind::direct_sum ||
            cert.components.size() != g.params.at("components").size())
            ++bad;
        if (!is_tridiagonal(lu_inverse(g.matrix), Tolerance{1e-8, 1e-8})) ++bad;
    }
    int done = 0;
    while (done < 100) {
        const std::size_t n = pick(rng, 3, 10);
        const Generated g = generate_instance(GenClass::gum_sum, n, rng());
        DenseMatrix m = g.matrix;
        const std::size_t i = pick(rng, 0, n - 1);
        m(i, i) = -1.0;  // breaks every block role while keeping the pattern graph
        if (std::abs(lu_det(m)) < 1e-6) continue;
        if (gum_decompose(m).kind != GumCertificate::Kind::not_gum) ++bad;
        ++done;
    }
    report(9, "100 direct sums decompose; 100 negative controls rejected", bad == 0,
           bad ? std::to_string(bad) + " failures" : "");
}

void criterion_10() {
    Rng rng(1021);
    int bad = 0;
    for (int it = 0; it < 200; ++it) {
        const TypeDParams td = random_type_d(rng, pick(rng, 1, 9), /*allow_flip=*/false);
        const auto sums = typed_inverse_row_sums(td);
        const auto dense = to_dense(typed_inverse(td)).row_sums();
        for (std::size_t i = 0; i < sums.size(); ++i)
            if (std::abs(sums[i] - dense[i]) > 1e-9) ++bad;
        if (std::abs(sums[0] - 1.0 / td.params[0]) > 1e-9) ++bad;
    }
    int done = 0;
    while (done < 200) {
        const CyclopsParams cy =
            random_cyclops(rng, pick(rng, 2, 9), uni(rng, 0.3, 2), uni(rng, 0.3, 2));
        if (std::abs(cy.a[cy.m - 1] * cy.a[cy.m] - cy.b1 * cy.b2) < 0.05) continue;
        const auto sums = cyclops_row_col_sums(cy);
        for (std::size_t i = 0; i < cy.order(); ++i)
            if (i + 1 != cy.m && i != cy.m &&
                (std::abs(sums.rows[i]) > 1e-9 || std::abs(sums.cols[i]) > 1e-9))
                ++bad;
        ++done;
    }
    for (int it = 0; it < 500; ++it)
        if (!green_det_sign_check(random_green_z(rng, pick(rng, 2, 8)))) ++bad;
    report(10, "row-sum identities and determinant sign implication", bad == 0,
           bad ? std::to_string(bad) + " violations" : "");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
