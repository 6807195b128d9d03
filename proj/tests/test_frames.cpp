#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadcoh/catalog.hpp"
#include "quadcoh/koszul.hpp"

#include <random>

using namespace quadcoh;

namespace {

ScalarMat field3(std::initializer_list<std::initializer_list<long>> rows) {
    ScalarMat m;
    for (auto& r : rows) {
        std::vector<Scalar> row;
        for (long v : r) row.push_back(Scalar(v));
        m.push_back(row);
    }
    return m;
}

} // namespace

TEST_CASE("frame construction and determinants") {
    // diagonal frame x d1, y d2, z d3
    LinFrame diag = build_frame({field3({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
                                 field3({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}),
                                 field3({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})});
    HomPoly xyz = monomial(3, {1, 1, 1});
    CHECK(diag.D == xyz);
    CHECK(diag.divs == std::vector<Scalar>{Scalar(1), Scalar(1), Scalar(1)});

    // rotation frame x d1 + y d2, x d2 - y d1, z d3
    LinFrame rot = build_frame({field3({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}),
                                field3({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}),
                                field3({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})});
    HomPoly r2z = (monomial(3, {2, 0, 0}) + monomial(3, {0, 2, 0})) * monomial(3, {0, 0, 1});
    CHECK(rot.D == r2z);

    // dependent fields are rejected
    auto xm = field3({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK_THROWS_AS(build_frame({xm, xm, field3({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})}),
                    DegenerateFrame);

    // non-commuting fields are rejected with the offending pair
    auto sh = field3({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK_THROWS_AS(build_frame({xm, sh, field3({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})}),
                    NonCommuting);
}

TEST_CASE("minor identities for random polynomial matrices") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<std::vector<HomPoly>> ell(n, std::vector<HomPoly>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    HomPoly e(n, 1);
                    for (int v = 0; v < n; ++v) {
                        MultiIndex m(n, 0);
                        m[v] = 1;
                        e.add_term(m, Scalar(val(rng)));
                    }
                    ell[i][j] = e;
                }
            HomPoly D = poly_det(ell);
            for (int m = 0; m <= n; ++m) CHECK(verify_minor_identities(ell, D, m));
        }
}

TEST_CASE("minor lemma on catalog frames") {
    for (int idx : {1, 2, 9}) {
        DhcEntry e = dhc_catalog(idx);
        for (int m = 0; m <= 3; ++m) CHECK(verify_minor_lemma(e.major.frame, m));
    }
}

TEST_CASE("frame-built tensors match the catalog printing") {
    // 2a Y23 + b Y31 + a Y12 on the rotation frame, with a=1, b=2:
    // (2ax - by)z d23 + (bx + 2ay)z d31 + a(x^2+y^2) d12
    DhcEntry e2 = dhc_catalog(2, {{"a", mpq_class(1)}, {"b", mpq_class(2)}});
    HomPoly x = monomial(3, {1, 0, 0}), y = monomial(3, {0, 1, 0}), z = monomial(3, {0, 0, 1});
    MultiVec expect = mv_term(3, {1, 2}, (x * Scalar(2) - y * Scalar(2)) * z) +
                      mv_term(3, {0, 2}, (x * Scalar(2) + y * Scalar(2)) * z * Scalar(-1)) +
                      mv_term(3, {0, 1}, x * x + y * y);
    CHECK(e2.Lambda == expect);
    CHECK(expand_srmi(e2.major.alpha, e2.major.frame) == e2.Lambda);

    ScalarMat zero(3, std::vector<Scalar>(3));
    LinFrame rot = e2.major.frame;
    CHECK(expand_srmi(zero, rot).is_zero());
}

TEST_CASE("stabilizers of quadratic tensors") {
    DhcEntry e4 = dhc_catalog(4, {{"a", mpq_class(1)}, {"b", mpq_class(1)}});
    auto st4 = stabilizer(e4.Lambda);
    CHECK(st4.size() == 2);
    // every stabilizer element kills the tensor through the linearized action
    for (const auto& g : st4) CHECK(schouten(e4.Lambda, j1(g)).is_zero());
    CHECK(!j2_image_membership(e4.Lambda, st4));

    DhcEntry e13 = dhc_catalog(13, {{"a", mpq_class(2)}, {"b", mpq_class(1)}, {"c", mpq_class(1)}});
    CHECK(stabilizer(e13.Lambda).size() == 3);

    DhcEntry e1 = dhc_catalog(1);
    CHECK(j2_image_membership(e1.Lambda, stabilizer(e1.Lambda)));

    MultiVec zero(3, 2, 2);
    CHECK(stabilizer(zero).size() == 9);
}

TEST_CASE("curl equals the weighted frame sum") {
    for (int idx : {1, 3, 7}) {
        DhcEntry e = dhc_catalog(idx);
        CHECK(curl_formula_check(e.major));
    }
}

TEST_CASE("joint eigenspace of the frame is spanned by the determinant") {
    for (int idx : {1, 2, 9}) {
        const LinFrame& f = dhc_catalog(idx).major.frame;
        // stack the shifted actions (Y_i - div Y_i) on degree-3 polynomials
        Mat stacked;
        for (int i = 0; i < 3; ++i) {
            Mat Yi = linvf_matrix(f.mats[i], 3, 3);
            Mat shift = Mat::identity(Yi.rows) * f.divs[i];
            stacked = i == 0 ? Yi - shift : vcat(stacked, Yi - shift);
        }
        auto ker = kernel_basis(stacked);
        REQUIRE(ker.size() == 1);
        // the kernel line carries the coefficients of D
        std::vector<Scalar> dvec(monomial_basis(3, 3).size());
        auto mons = monomial_basis(3, 3);
        for (size_t m = 0; m < mons.size(); ++m) dvec[m] = f.D.coeff(mons[m]);
        Mat two = from_columns({ker[0], dvec}, (int)dvec.size());
        CHECK(rank(two) == 1);
    }
}
