#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadcoh/linalg.hpp"
#include "quadcoh/poly.hpp"

using namespace quadcoh;

TEST_CASE("gaussian rational arithmetic") {
    Scalar i = imag_unit();
    CHECK(i * i == Scalar(-1));
    CHECK((Scalar(3) + i) * (Scalar(3) - i) == Scalar(10));
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
    CHECK((rat(3, 7) * imag_unit()).inv() == rat(-7, 3) * imag_unit());
    CHECK_THROWS_AS(Scalar().inv(), ZeroDivisor);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), ZeroDivisor);
}

TEST_CASE("scalar literals round-trip") {
    for (const Scalar& s : {Scalar(0), Scalar(-5), rat(22, 7),
                            Scalar(mpq_class(1, 2), mpq_class(-3, 4)),
                            imag_unit(), Scalar(0) - imag_unit()}) {
        CHECK(parse_scalar(to_string(s)) == s);
    }
    CHECK(parse_scalar("2 i") == Scalar(2) * imag_unit());
    CHECK_THROWS_AS(parse_scalar("1/0"), IoError);
    CHECK_THROWS_AS(parse_scalar("zebra"), IoError);
}

TEST_CASE("monomial bases follow the ascending order") {
    auto b = monomial_basis(3, 2);
    REQUIRE(b.size() == 6);
    CHECK(b.front() == MultiIndex{0, 0, 2});
    CHECK(b.back() == MultiIndex{2, 0, 0});
    for (size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1] < b[i]);
    CHECK(binom(5, 2) == 10);
    CHECK((long)monomial_basis(4, 3).size() == binom(6, 3));
}

TEST_CASE("polynomial ring operations") {
    int n = 3;
    HomPoly x = monomial(n, {1, 0, 0}), y = monomial(n, {0, 1, 0}), z = monomial(n, {0, 0, 1});
    HomPoly f = x * x + y * z * Scalar(2);
    CHECK(f.deg == 2);
    CHECK(f.coeff({2, 0, 0}) == Scalar(1));
    CHECK(derivative(f, 0) == x * Scalar(2));
    CHECK(derivative(f, 1) == z * Scalar(2));
    CHECK((f - f).is_zero());

    // Euler field acts by the degree
    ScalarMat E(n, std::vector<Scalar>(n));
    for (int k = 0; k < n; ++k) E[k][k] = Scalar(1);
    CHECK(apply_linvf(E, f) == f * Scalar(2));

    auto q = divides(x + y, x * x - y * y);
    REQUIRE(q.has_value());
    CHECK(*q == x - y);
    CHECK(!divides(z, x * x + y * z).has_value());

    // substitute x -> x + y fixes x^2 - y^2 + ... check a simple shear
    ScalarMat U(n, std::vector<Scalar>(n));
    U[0][0] = U[1][1] = U[2][2] = Scalar(1);
    U[0][1] = Scalar(1);  // x -> x + y
    CHECK(substitute_linear(x * x, U) == x * x + x * y * Scalar(2) + y * y);
}

TEST_CASE("complex conjugation on polynomials") {
    HomPoly f(2, 1);
    f.add_term({1, 0}, imag_unit());
    f.add_term({0, 1}, Scalar(2));
    CHECK(!f.is_real_poly());
    CHECK(f.conj().coeff({1, 0}) == Scalar(0) - imag_unit());
    CHECK((f + f.conj()).is_real_poly());
}

TEST_CASE("row reduction, rank, kernel, solve") {
    Mat M(3, 4);
    // rows: x1 + x2, x3 + x4, x1 + x2 + x3 + x4 (rank 2)
    M.at(0, 0) = M.at(0, 1) = Scalar(1);
    M.at(1, 2) = M.at(1, 3) = Scalar(1);
    M.at(2, 0) = M.at(2, 1) = M.at(2, 2) = M.at(2, 3) = Scalar(1);
    CHECK(rank(M) == 2);
    auto ker = kernel_basis(M);
    CHECK(ker.size() == 2);
    for (const auto& v : ker)
        for (const Scalar& c : M.apply(v)) CHECK(c.is_zero());

    auto sol = solve(M, {Scalar(2), Scalar(3), Scalar(5)});
    REQUIRE(sol.has_value());
    auto img = M.apply(*sol);
    CHECK(img == std::vector<Scalar>{Scalar(2), Scalar(3), Scalar(5)});
    CHECK(!solve(M, {Scalar(1), Scalar(1), Scalar(3)}).has_value());
}

TEST_CASE("inverse and span bookkeeping") {
    Mat A(2, 2);
    A.at(0, 0) = Scalar(1);
    A.at(0, 1) = imag_unit();
    A.at(1, 1) = Scalar(2);
    auto Ainv = inverse(A);
    REQUIRE(Ainv.has_value());
    CHECK((*Ainv * A) == Mat::identity(2));
    Mat S(2, 2);
    S.at(0, 0) = Scalar(1);
    S.at(1, 0) = Scalar(2);  // singular
    CHECK(!inverse(S).has_value());

    IncrementalSpan span(3);
    CHECK(span.add({Scalar(1), Scalar(0), Scalar(1)}));
    CHECK(span.add({Scalar(0), Scalar(1), Scalar(0)}));
    CHECK(!span.add({Scalar(2), Scalar(3), Scalar(2)}));
    CHECK(span.rank() == 2);
    CHECK(span.contains({Scalar(1), Scalar(1), Scalar(1)}));
    CHECK(!span.contains({Scalar(1), Scalar(0), Scalar(0)}));
}
