#pragma once
#include <map>
#include <optional>
#include <vector>
#include "quadcoh/scalar.hpp"

namespace quadcoh {

/* Exponent vector of a monomial (all entries >= 0), or a spectrum index set
 * where entries >= -1 are allowed.  Ordered by entrywise lexicographic
 * comparison; with the convention x_1 > x_2 > ... > x_n this ascending order
 * is exactly the global monomial order used everywhere in the project. */
using MultiIndex = std::vector<int>;

inline int mi_degree(const MultiIndex& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

// all monomials of degree r in n variables, ascending in the global order;
// size is C(r+n-1, n-1)
std::vector<MultiIndex> monomial_basis(int n, int r);

long binom(int n, int k);

/* Homogeneous polynomial: nonzero terms only, all of degree `deg`. */
struct HomPoly {
    int n = 0;
    int deg = 0;
    std::map<MultiIndex, Scalar> terms;

    HomPoly() = default;
    HomPoly(int n_, int deg_) : n(n_), deg(deg_) {}

    bool is_zero() const { return terms.empty(); }

    void add_term(const MultiIndex& m, const Scalar& c);

    const Scalar coeff(const MultiIndex& m) const {
        auto it = terms.find(m);
        return it == terms.end() ? Scalar() : it->second;
    }

    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly operator*(const HomPoly& o) const;   // degrees add
    HomPoly operator*(const Scalar& c) const;
    HomPoly operator-() const { return *this * Scalar(-1); }

    bool operator==(const HomPoly& o) const { return n == o.n && terms == o.terms; }
    bool operator!=(const HomPoly& o) const { return !(*this == o); }

    bool is_real_poly() const;
    HomPoly conj() const;
};

inline HomPoly operator*(const Scalar& c, const HomPoly& p) { return p * c; }

// the monomial c * x^m
HomPoly monomial(int n, const MultiIndex& m, const Scalar& c = Scalar(1));
HomPoly constant_poly(int n, const Scalar& c);

// partial derivative d/dx_i (0-based i); degree drops by one
HomPoly derivative(const HomPoly& p, int i);

/* Action of the linear vector field with coefficient matrix Y, i.e.
 * (sum_{m,p} Y[m][p] x_p d/dx_m) P.  Degree preserved. */
using ScalarMat = std::vector<std::vector<Scalar>>;
HomPoly apply_linvf(const ScalarMat& Y, const HomPoly& P);

/* Exact divisibility test by linear solve in the coefficients of the
 * candidate quotient; returns the unique T with Q = D*T, or nothing. */
std::optional<HomPoly> divides(const HomPoly& D, const HomPoly& Q);

// P(Ux): substitute x_i -> sum_j U[i][j] y_j
HomPoly substitute_linear(const HomPoly& P, const ScalarMat& U);

std::string to_string(const HomPoly& p, const std::vector<std::string>& vars = {});

} // namespace quadcoh
