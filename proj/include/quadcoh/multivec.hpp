#pragma once
#include <optional>
#include "quadcoh/poly.hpp"

namespace quadcoh {

using Tuple = std::vector<int>;  // strictly increasing, 0-based entries

// all increasing p-tuples of {0..n-1}, lexicographically ascending
std::vector<Tuple> increasing_tuples(int n, int p);

/* p-vector field with homogeneous polynomial coefficients in the canonical
 * frame d_1 ^ ... : comps maps an increasing tuple K to the coefficient of
 * d_K.  All coefficients share one degree `deg`. */
struct MultiVec {
    int n = 0;
    int p = 0;
    int deg = 0;
    std::map<Tuple, HomPoly> comps;

    MultiVec() = default;
    MultiVec(int n_, int p_, int deg_) : n(n_), p(p_), deg(deg_) {}

    bool is_zero() const;
    void add_comp(const Tuple& k, const HomPoly& poly);
    HomPoly comp(const Tuple& k) const;

    MultiVec operator+(const MultiVec& o) const;
    MultiVec operator-(const MultiVec& o) const;
    MultiVec operator*(const Scalar& c) const;
    MultiVec operator-() const { return *this * Scalar(-1); }
    bool operator==(const MultiVec& o) const;
    bool operator!=(const MultiVec& o) const { return !(*this == o); }
};

inline MultiVec operator*(const Scalar& c, const MultiVec& v) { return v * c; }

// c * x^m d_K and friends
MultiVec mv_term(int n, const Tuple& k, const HomPoly& poly);
MultiVec mv_vf(const HomPoly& f, int direction);  // f d_i

MultiVec wedge(const MultiVec& A, const MultiVec& B);

/* Schouten-Nijenhuis bracket, by bilinear expansion over decomposable terms
 * f d_K = (f d_{k1}) ^ d_{k2...}; conventions: [X,f] = Xf, [X,Y] = Lie
 * bracket, [A, B^C] = [A,B]^C + (-1)^((a-1) b) B^[A,C]. */
MultiVec schouten(const MultiVec& A, const MultiVec& B);

/* Divergence operator pulled back from the de Rham differential through
 * contraction with the standard volume form; lowers both the wedge degree
 * and the coefficient degree by one. */
MultiVec koszul_div(const MultiVec& A);

MultiVec curl(const MultiVec& Lambda);  // koszul_div restricted to bivectors

MultiVec lp_coboundary(const MultiVec& Lambda, const MultiVec& C);

bool is_poisson(const MultiVec& Lambda);
bool is_k_exact(const MultiVec& Lambda);
// Liouville witness: a linear field X with Lambda = [Lambda, X], if one exists
std::optional<ScalarMat> is_lp_exact(const MultiVec& Lambda);

std::string to_string(const MultiVec& A);

} // namespace quadcoh
