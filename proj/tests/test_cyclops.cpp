#include <doctest.h>

#include "test_support.hpp"
#include "ztri/cyclops.hpp"
#include "ztri/oracle.hpp"

using namespace ztri;
using namespace ztri::testing;

TEST_CASE("build of the pinned 6x6 instance") {
    CHECK(max_diff(cyclops_build(fixture_cyclops_params()), fixture_cyclops()) == 0.0);
}

TEST_CASE("validation rejects broken eye-side chains") {
    CHECK_THROWS_AS(cyclops_build({2, {1, 2, 3, 4}, 1.0, 1.0}), OrderingViolation);
    CHECK_THROWS_AS(cyclops_build({2, {4, 3, 3, 2}, 1.0, 1.0}), OrderingViolation);
    CHECK_NOTHROW(cyclops_build({2, {4, 3, 3.5, 4}, 1.0, 1.0}));
}

TEST_CASE("recognition recovers the parameters") {
    const auto r = cyclops_recognize(fixture_cyclops());
    REQUIRE(r.has_value());
    CHECK(r->m == 3);
    CHECK(r->a == std::vector<double>{4, 3, 2, 1, 2, 3});
    CHECK(r->b1 == doctest::Approx(-1.0));
    CHECK(r->b2 == doctest::Approx(-4.0));

    Rng rng(103);
    for (int it = 0; it < 150; ++it) {
        const std::size_t n = pick(rng, 2, 8);
        const CyclopsParams p = random_cyclops(rng, n, uni(rng, -1.0, 1.0), uni(rng, -1.0, 1.0));
        const auto q = cyclops_match_eye(cyclops_build(p), p.m);
        REQUIRE(q.has_value());
        CHECK(q->m == p.m);
        CHECK(q->a == p.a);
        CHECK(q->b1 == doctest::Approx(p.b1).scale(1.0));
        CHECK(q->b2 == doctest::Approx(p.b2).scale(1.0));
    }
    CHECK_FALSE(cyclops_recognize(DenseMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}))
                    .has_value());
}

TEST_CASE("schur complements are shifted type d blocks") {
    Rng rng(107);
    for (int it = 0; it < 100; ++it) {
        const std::size_t n = pick(rng, 2, 7);
        CyclopsParams p = random_cyclops(rng, n, uni(rng, 0.3, 2.0), uni(rng, 0.3, 2.0));
        if (p.m == 0 || p.m == n) continue;
        const DenseMatrix c = cyclops_build(p);

        for (SchurSide side : {SchurSide::eliminate_11, SchurSide::eliminate_22}) {
            const CyclopsSchur s = cyclops_schur(p, side);
            // oracle: S = C_22 - C_21 C_11^{-1} C_12 (or the mirrored version)
            std::vector<std::size_t> first, second;
            for (std::size_t k = 0; k < p.m; ++k) first.push_back(k);
            for (std::size_t k = p.m; k < n; ++k) second.push_back(k);
            const auto& keep = side == SchurSide::eliminate_11 ? second : first;
            const auto& drop = side == SchurSide::eliminate_11 ? first : second;
            const DenseMatrix s_oracle = [&] {
                const DenseMatrix inner = lu_inverse(c.principal_submatrix(drop));
                DenseMatrix out = c.principal_submatrix(keep);
                for (std::size_t i = 0; i < keep.size(); ++i)
                    for (std::size_t j = 0; j < keep.size(); ++j)
                        for (std::size_t u = 0; u < drop.size(); ++u)
                            for (std::size_t v = 0; v < drop.size(); ++v)
                                out(i, j) -= c(keep[i], drop[u]) * inner(u, v) *
                                             c(drop[v], keep[j]);
                return out;
            }();
            // closed form: the (already shifted) type D block
            TypeDParams shifted = s.block;
            shifted.strict = false;
            CHECK(max_diff(typed_build(shifted), s_oracle) < 1e-9);
        }
    }
}

TEST_CASE("schur complement error cases") {
    CHECK_THROWS_AS(cyclops_schur({1, {0, 1}, 1.0, 1.0}, SchurSide::eliminate_11),
                    DivisionByZero);
    CHECK_THROWS_AS(cyclops_schur({0, {1, 2}, 0.0, 0.0}, SchurSide::eliminate_11),
                    DegenerateEye);
}

TEST_CASE("determinant matches the lu oracle, including zero eye parameters") {
    Rng rng(109);
    auto check_det = [](const CyclopsParams& p) {
        const double closed = cyclops_det(p);
        const double oracle = lu_det(cyclops_build(p));
        CHECK(closed ==
              doctest::Approx(oracle).epsilon(1e-9).scale(std::max(1.0, std::abs(oracle))));
    };
    CHECK(cyclops_det(fixture_cyclops_params()) == doctest::Approx(-2.0));
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = pick(rng, 2, 10);
        check_det(random_cyclops(rng, n, uni(rng, -1, 1), uni(rng, -1, 1)));
        check_det(random_cyclops(rng, n, 0.0, uni(rng, -1, 1)));  // a_m = 0
        check_det(random_cyclops(rng, n, 0.0, 0.0));              // a_m = a_{m+1} = 0
    }
}

TEST_CASE("nonsingularity tracks the bridge term") {
    const auto pinned = cyclops_is_nonsingular(fixture_cyclops_params());
    CHECK(pinned.nonsingular);
    CHECK(pinned.det_sign == DetSign::negative);
    // a_m a_{m+1} = b1 b2 makes the matrix singular
    const auto sing = cyclops_is_nonsingular({1, {2, 3}, 2.0, 3.0});
    CHECK_FALSE(sing.nonsingular);
    CHECK(sing.det_sign == DetSign::zero);
}

TEST_CASE("closed-form inverse matches the pinned display") {
    const TridiagonalMatrix inv = cyclops_inverse(fixture_cyclops_params());
    CHECK(max_diff(to_dense(inv), fixture_cyclops_inverse()) < 1e-12);
}

TEST_CASE("closed-form inverse inverts random instances") {
    Rng rng(113);
    int done = 0;
    while (done < 200) {
        const std::size_t n = pick(rng, 2, 9);
        const CyclopsParams p = random_cyclops(rng, n, uni(rng, -1, 1), uni(rng, -1, 1));
        if (!cyclops_is_nonsingular(p).nonsingular) continue;
        if (std::abs(p.a[p.m - 1] * p.a[p.m] - p.b1 * p.b2) < 0.05) continue;
        const DenseMatrix c = cyclops_build(p);
        const DenseMatrix prod = c.multiply(to_dense(cyclops_inverse(p)));
        CHECK(max_diff(prod, DenseMatrix::identity(n)) < 1e-8);
        ++done;
    }
    CHECK_THROWS_AS(cyclops_inverse({1, {2, 3}, 2.0, 3.0}), SingularMatrix);
}

TEST_CASE("degenerate eyes fall back to the pure chains") {
    const CyclopsParams p{0, {1, 2, 3}, 0.0, 0.0};
    CHECK(cyclops_det(p) == doctest::Approx(typed_det({{1, 2, 3}, false, true})));
    const CyclopsParams q{3, {3, 2, 1}, 0.0, 0.0};
    CHECK(cyclops_det(q) == doctest::Approx(typed_det({{3, 2, 1}, true, true})));
    CHECK(max_diff(to_dense(cyclops_inverse(p)),
                   to_dense(typed_inverse({{1, 2, 3}, false, true}))) == 0.0);
}

TEST_CASE("inverse row and column sums vanish away from the eye") {
    Rng rng(127);
    int done = 0;
    while (done < 150) {
        const std::size_t n = pick(rng, 2, 9);
        const CyclopsParams p = random_cyclops(rng, n, uni(rng, -1, 1), uni(rng, -1, 1));
        if (std::abs(p.a[p.m - 1] * p.a[p.m] - p.b1 * p.b2) < 0.05) continue;
        const RowColSums sums = cyclops_row_col_sums(p);
        const DenseMatrix dense = to_dense(cyclops_inverse(p));
        const auto rows = dense.row_sums();
        const auto cols = dense.col_sums();
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(sums.rows[i] == doctest::Approx(rows[i]).epsilon(1e-8).scale(1.0));
            CHECK(sums.cols[i] == doctest::Approx(cols[i]).epsilon(1e-8).scale(1.0));
            if (i + 1 != p.m && i != p.m) {  // 0-based: eye rows are m-1 and m
                CHECK(std::abs(sums.rows[i]) < 1e-9);
                CHECK(std::abs(sums.cols[i]) < 1e-9);
            }
        }
        ++done;
    }
}

TEST_CASE("z-inverse sign conditions") {
    CHECK(cyclops_inverse_is_z(fixture_cyclops_params()));
    // positive off-values with a negative bridge: inverse has positive entries
    CHECK_FALSE(cyclops_inverse_is_z({1, {1, 1.5}, 1.4, 1.4}));
    // zero off-values are always acceptable
    CHECK(cyclops_inverse_is_z({1, {2, 1}, 0.0, 0.0}));
}

TEST_CASE("predictor matches the pinned example and the oracles") {
    const auto p = cyclops_predict_ls(fixture_cyclops_params());
    CHECK(p.s == 1);
    CHECK(p.witness.at("y") == doctest::Approx(3.0));
    CHECK(p.witness.at("r") == doctest::Approx(3.0));
    CHECK(p.witness.at("t") == doctest::Approx(3.0));

    Rng rng(131);
    int done = 0;
    while (done < 150) {
        const std::size_t n = pick(rng, 3, 7);
        CyclopsParams p2 = random_cyclops(rng, n, uni(rng, 0.3, 2.0), uni(rng, 0.3, 2.0));
        p2.b1 = uni(rng, 0.1, 1.0);
        p2.b2 = uni(rng, 0.1, 1.0);
        if (std::abs(p2.a[p2.m - 1] * p2.a[p2.m] - p2.b1 * p2.b2) < 0.05) continue;
        if (!cyclops_inverse_is_z(p2)) continue;
        const auto predicted = cyclops_predict_ls(p2);
        const DenseMatrix a = lu_inverse(cyclops_build(p2));
        REQUIRE(is_z_matrix(a));
        CHECK(predicted.s == ls_classify_by_definition(a).s);
        CHECK(predicted.s == ls_classify_by_minor_signs(a).s);
        ++done;
    }
}
