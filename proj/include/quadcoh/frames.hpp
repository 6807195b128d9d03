#pragma once

#include "quadcoh/multivec.hpp"
#include "quadcoh/linalg.hpp"

#include <optional>
#include <utility>

namespace quadcoh {

// A commuting frame of linear vector fields Y_1..Y_n on R^n.  Each field is
// stored as its coefficient matrix a (Y = sum a[m][p] x_p d_m, the same
// convention as apply_linvf).
struct LinFrame {
    int n = 0;
    std::vector<ScalarMat> mats;               // coefficient matrix of each Y_i
    std::vector<std::vector<HomPoly>> ell;     // ell[i][r] = coefficient of d_r in Y_i
    HomPoly D;                                 // det(ell), degree n
    std::vector<Scalar> divs;                  // div Y_i = tr(mats[i])
};

// Validates commutation and nondegeneracy (det != 0), precomputes D and the
// divergences, and checks the joint-eigenvector identity Y_i D = (div Y_i) D.
LinFrame build_frame(const std::vector<ScalarMat>& mats);

// Y_i as a multivector field (p = 1).
MultiVec frame_field(const LinFrame& f, int i);
// Y_{k_1} ^ ... ^ Y_{k_p} for an increasing tuple of frame indices.
MultiVec frame_wedge(const LinFrame& f, const Tuple& k);

// Determinant of a square matrix of homogeneous polynomials (all entries must
// share one degree; the zero polynomial is allowed in any slot).
HomPoly poly_det(const std::vector<std::vector<HomPoly>>& M);

// Minor of M keeping rows/cols listed (both tuples increasing, equal length).
HomPoly minor_keep(const std::vector<std::vector<HomPoly>>& M,
                   const Tuple& rows, const Tuple& cols);
// Minor of M deleting the listed rows/cols.
HomPoly minor_del(const std::vector<std::vector<HomPoly>>& M,
                  const Tuple& rows, const Tuple& cols);

// First minors of the frame matrix: L[i][j] deletes row i col j of ell
// (unsigned), Lsigned[i][j] = (-1)^{i+j} L[i][j] is the cofactor.
struct MinorTables {
    int n = 0;
    std::vector<std::vector<HomPoly>> L;
    std::vector<std::vector<HomPoly>> Lsigned;
};
MinorTables minor_tables(const LinFrame& f);

// Checks, for every pair of increasing m-tuples (i, j):
//   minor_del(L, i, j)  = D^{n-m-1} * minor_keep(ell, i, j)
//   minor_keep(L, i, j) = D^{m-1}   * minor_del(ell, i, j)
// where L is the first-minor table of ell and D = det ell (cross-multiplied
// by D when the exponent would be negative).  Includes det L = D^{n-1} as
// the m = 0 case.  Pure multilinear algebra, so it must hold for any square
// polynomial matrix, not only frame matrices.
bool verify_minor_identities(const std::vector<std::vector<HomPoly>>& ell,
                             const HomPoly& D, int m);
bool verify_minor_lemma(const LinFrame& f, int m);

// Quadratic Poisson structure Lambda = sum_{i<j} alpha^{ij} Y_i ^ Y_j built on
// a commuting frame, with the modular data that drives the whole calculus:
// X_i = sum_j alpha^{ij} Y_j and delta_i = div X_i.
struct SrmiStructure {
    LinFrame frame;
    ScalarMat alpha;               // skew-symmetric, constant
    MultiVec Lambda;
    std::vector<ScalarMat> X;      // coefficient matrices of the X_i
    std::vector<Scalar> delta;
};

MultiVec expand_srmi(const ScalarMat& alpha, const LinFrame& frame);
SrmiStructure make_srmi(const ScalarMat& alpha, const LinFrame& frame);

// curl(Lambda) == sum_i delta_i Y_i, an identity for every structure of this
// shape; exposed for the diagnostic suites.
bool curl_formula_check(const SrmiStructure& S);

// Linearization of gl_n on fields: j1(a) = sum_{ij} a[i][j] x_i d_j, and the
// induced map on wedges j2(a, b) = j1(a) ^ j1(b).
MultiVec j1(const ScalarMat& a);
MultiVec j2(const ScalarMat& a, const ScalarMat& b);

// Basis of the stabilizer {a in gl_n : [Lambda, j1(a)] = 0}.
std::vector<ScalarMat> stabilizer(const MultiVec& Lambda);

// Whether Lambda lies in span{ j2(a, b) : a, b in stab }.
bool j2_image_membership(const MultiVec& Lambda, const std::vector<ScalarMat>& stab);

// Flattens a bivector (or any fixed-(p,deg) multivector) to a coefficient
// vector over the (tuple, monomial) basis, for span arithmetic.
std::vector<Scalar> mv_coords(const MultiVec& v, int p, int deg);

} // namespace quadcoh
