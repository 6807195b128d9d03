#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadcoh/catalog.hpp"
#include "quadcoh/spectral.hpp"

using namespace quadcoh;

namespace {

SrmiStructure cert(int idx, ParamMap params = {}) {
    DhcEntry e = dhc_catalog(idx, params);
    REQUIRE(e.certificate.has_value());
    return *e.certificate;
}

} // namespace

TEST_CASE("characteristic polynomials and roots over Q(i)") {
    Mat R(2, 2);
    R.at(0, 1) = Scalar(-1);
    R.at(1, 0) = Scalar(1);  // rotation generator: t^2 + 1
    Poly1 cp = charpoly(R);
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == Scalar(1));
    CHECK(cp[1] == Scalar(0));
    CHECK(cp[2] == Scalar(1));
    auto roots = qi_roots(cp);
    REQUIRE(roots.has_value());
    CHECK(roots->size() == 2);
    for (const Scalar& r : *roots) CHECK(poly1_eval(cp, r).is_zero());

    CHECK(qi_sqrt(Scalar(-4)) == Scalar(2) * imag_unit());
    CHECK(!qi_sqrt(Scalar(2)).has_value());
    // t^2 - 2 does not split over Q(i)
    CHECK(!qi_roots({Scalar(-2), Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("simultaneous triangularization of a commuting pair") {
    Mat R(2, 2), S = Mat::identity(2) * Scalar(3);
    R.at(0, 1) = Scalar(-1);
    R.at(1, 0) = Scalar(1);
    SpectrumReport rep = simultaneous_triangularize({R, S});
    REQUIRE(rep.ok);
    for (const Mat& u : rep.upper) CHECK(u.is_upper_triangular());
    CHECK(rep.Uinv * rep.U == Mat::identity(2));
    for (size_t k = 0; k < rep.upper.size(); ++k)
        CHECK(rep.Uinv * (k == 0 ? R : S) * rep.U == rep.upper[k]);
    // spectrum: {(i,3),(-i,3)}
    CHECK(rep.spectrum.size() == 2);
}

TEST_CASE("frame spectra of the catalog structures") {
    for (int idx : {2, 3, 9}) {
        SpectrumReport rep = frame_spectrum(cert(idx));
        CHECK(rep.ok);
    }
}

TEST_CASE("induced operators are triangular and read the formula spectrum") {
    for (int idx : {2, 3, 9})
        for (int r = 0; r <= 4; ++r) {
            SrmiStructure S = cert(idx);
            OperatorTuple T = induced_triangular_ops(S, r);
            for (int j = 0; j < T.count; ++j) CHECK(T.op(j).is_upper_triangular());
            SpectrumReport js = joint_spectrum(S, r);
            REQUIRE(js.ok);
            CHECK(js.spectrum == spectrum_formula(S, r));
        }
}

TEST_CASE("kernel tower of the rotation structure") {
    SrmiStructure S = cert(2, {{"a", mpq_class(1)}, {"b", mpq_class(0)}});
    for (int t = 1; t <= 2; ++t) {
        int r = 3 * t;
        auto ke = kernel_exponents(S, r);
        REQUIRE(ke.size() == 1);
        CHECK(ke[0] == MultiIndex{t - 1, t - 1, t - 1});
        KernelTower tower = kernel_tower(induced_triangular_ops(S, r));
        CHECK(tower.mu == 1);
        CHECK(tower.s == 1);
        CHECK(tower.kernel_dims == std::vector<int>{1});
    }
    // no zero line off multiples of three
    for (int r = 1; r <= 8; ++r)
        if (r % 3) CHECK(kernel_exponents(S, r).empty());
}

TEST_CASE("deep tower of the degenerate shear structure") {
    SrmiStructure S = cert(3, {{"a", mpq_class(0)}});
    KernelTower tower = kernel_tower(induced_triangular_ops(S, 3));
    CHECK(tower.mu == 3);
    CHECK(tower.s == 3);
    CHECK(tower.kernel_dims == std::vector<int>{1, 1, 1});
    CHECK(tower.pivots.size() == 3);
    CHECK((int)tower.terminal.size() == (int)monomial_basis(3, 3).size() - 3);
}

TEST_CASE("cocycle reduction onto the tower span") {
    SrmiStructure S = cert(2, {{"a", mpq_class(1)}, {"b", mpq_class(0)}});
    OperatorTuple T = induced_triangular_ops(S, 3);
    KernelTower tower = kernel_tower(T);
    KoszulCohomology H = koszul_cohomology(T);
    REQUIRE(H.dims[1] > 0);
    const auto& c = H.reps[1][0];
    ReducedCocycle rc = reduce_cocycle(T, tower, c, 1);

    // reduced stays a cocycle and each tuple block lies in the tower span
    Mat d1 = koszul_cochain_matrix(T, 1);
    for (const Scalar& v : d1.apply(rc.reduced)) CHECK(v.is_zero());
    int N = T.N;
    Mat K = from_columns(tower.kernels[0], N);
    GrassmannBasis G(T.count);
    for (int t = 0; t < G.dim(1); ++t) {
        std::vector<Scalar> block(c.size() / G.dim(1));
        for (size_t m = 0; m < block.size(); ++m) block[m] = rc.reduced[size_t(t) * N + m];
        CHECK(in_column_span(K, block));
    }

    // the difference is exactly the coboundary of the witness
    Mat d0 = koszul_cochain_matrix(T, 0);
    auto img = d0.apply(rc.witness);
    for (size_t m = 0; m < img.size(); ++m) CHECK(c[m] - rc.reduced[m] == img[m]);

    // garbage input is rejected
    std::vector<Scalar> junk(c.size());
    junk[0] = Scalar(1);
    junk[c.size() - 1] = Scalar(7);
    CHECK_THROWS_AS(reduce_cocycle(T, tower, junk, 1), NotACocycle);
}

TEST_CASE("kernel-image splitting detects tower depth") {
    SrmiStructure flat = cert(2, {{"a", mpq_class(1)}, {"b", mpq_class(0)}});
    CHECK(complement_kernel_check(induced_triangular_ops(flat, 3)));
    SrmiStructure deep = cert(3, {{"a", mpq_class(0)}});
    CHECK(!complement_kernel_check(induced_triangular_ops(deep, 3)));
}
