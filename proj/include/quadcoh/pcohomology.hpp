#pragma once

#include "quadcoh/spectral.hpp"

#include <optional>
#include <utility>

namespace quadcoh {

/* Cochain in the frame presentation: stands for D^{-1} sum_k P^k Y_k over
 * increasing frame tuples k, with every numerator P^k homogeneous of degree
 * r.  Canonical-frame cochains of coefficient degree d embed here at
 * r = d + n - p via `inject`. */
struct PCochain {
    int n = 0, p = 0, r = 0;
    std::map<Tuple, HomPoly> comps;

    PCochain() = default;
    PCochain(int n_, int p_, int r_) : n(n_), p(p_), r(r_) {}

    bool is_zero() const;
    void add_comp(const Tuple& k, const HomPoly& poly);
    HomPoly comp(const Tuple& k) const;

    PCochain operator+(const PCochain& o) const;
    PCochain operator-(const PCochain& o) const;
    PCochain operator*(const Scalar& c) const;
    bool operator==(const PCochain& o) const;
    bool operator!=(const PCochain& o) const { return !(*this == o); }
};

// flat coordinates over (frame tuple) x (degree-r monomial), tuple-major:
// the same layout the Koszul matrices act on
std::vector<Scalar> pc_coords(const PCochain& c);
PCochain pc_from_coords(int n, int p, int r, const std::vector<Scalar>& v);

MultiVec mv_from_coords(int n, int p, int d, const std::vector<Scalar>& v);

// dimensions of the graded slices (0 when the degree is negative)
long r_space_dim(int n, int p, int d);
long p_space_dim(int n, int p, int r);

/* Embedding of a canonical-frame cochain of coefficient degree d as a frame
 * cochain with numerators of degree r = d + n - p: the numerator on tuple k
 * is sum_i (-1)^{|i|+|k|} minor_del(ell, k, i) s^i.  A chain map onto a
 * subcomplex; composing with the recovery of `real_witness` is the
 * identity, and skipping the division by D multiplies by D. */
PCochain inject(const SrmiStructure& S, const MultiVec& C);

/* Contracts the numerators with the kept minors of the frame matrix; the
 * cochain lies in the embedded subspace iff every contraction is divisible
 * by the frame determinant, and the quotients assemble the canonical-frame
 * witness. */
std::optional<MultiVec> real_witness(const SrmiStructure& S, const PCochain& c);
bool is_real(const SrmiStructure& S, const PCochain& c);

// coboundary on numerators: sum_{k,i} ((X_i - delta_i) P^k) Y_i ^ Y_k
PCochain p_coboundary(const SrmiStructure& S, const PCochain& c);

// the divergence-shifted modular family acting on degree-r numerators; its
// Koszul complex is the frame-cochain complex in the pc_coords layout
OperatorTuple srmi_operator_tuple(const SrmiStructure& S, int r);

// Koszul cohomology of the frame-cochain complex at numerator degree r,
// all wedge degrees at once
KoszulCohomology p_cohomology(const SrmiStructure& S, int r);

/* Splitting of a frame-cochain slice into the embedded image and the span of
 * the unit vectors at the non-pivot coordinates of that image.  The pivot
 * rows carry an invertible corner B of the embedding matrix, so splitting a
 * vector costs one small solve instead of a full-size inverse:
 *   y_R = Binv x[pivot_rows],   y_S = x[s_rows] - C y_R.
 * With `reversed` the pivots are found in reversed coordinate order, which
 * yields a genuinely different complement for the independence checks. */
struct Complement {
    int p = 0, r = 0;
    long nR = 0, nP = 0, nS = 0;     // space dimensions, nP = nR + nS
    std::vector<int> pivot_rows;     // coordinates carrying the embedded image
    std::vector<int> s_rows;         // coordinates spanning the complement
    Mat inj;                         // nP x nR matrix of the embedding
    Mat Binv;                        // inverse of inj[pivot_rows, :]
    Mat C;                           // inj[s_rows, :]
};
Complement choose_complement(const SrmiStructure& S, int p, int r, bool reversed = false);

// coefficients of x over the splitting: (embedded part, complement part)
std::pair<std::vector<Scalar>, std::vector<Scalar>>
split_coords(const Complement& c, const std::vector<Scalar>& x);

/* One bidegree of the inclusion/quotient bookkeeping: cohomology dimensions
 * of the embedded, full, and complement complexes, canonical-frame
 * representatives of the embedded cohomology, and the outcome of the
 * exactness and reassembly checks at this wedge degree. */
struct SliceReport {
    int p = 0, r = 0, d = 0;         // d = r - n + p
    long dim_R = 0, dim_P = 0, dim_S = 0;
    std::vector<MultiVec> reps_R;
    bool les_ok = false;
    bool assemble_ok = false;
};

/* Fixed-r pipeline over p = 0..n: direct cohomology of the canonical-frame
 * subcomplex, Koszul cohomology of the frame complex, cohomology of the
 * complement, ranks of the three induced maps of the short exact sequence
 * 0 -> R -> P -> S -> 0, exactness at every node of the associated long
 * exact sequence, and the rank identity recovering dim_R from the P- and
 * S-columns alone. */
std::vector<SliceReport> srmi_slices(const SrmiStructure& S, int r,
                                     bool reversed_complement = false);

// cohomology dimension of the complement complex at one bidegree
long s_cohomology(const SrmiStructure& S, int p, int r, bool reversed_complement = false);

/* Chain-level connecting map out of the complement at (p, r): the embedded
 * part of the coboundary of a complement vector, as a matrix to the
 * canonical coordinates at (p+1, r), with the rank of the induced map on
 * cohomology. */
struct ConnectingData {
    Mat phi;
    long rank_sharp = 0;
};
ConnectingData connecting_map(const SrmiStructure& S, int p, int r,
                              bool reversed_complement = false);

// brute-force slice cohomology of any Poisson tensor: exact kernel modulo
// image of the coboundary between coefficient-degree slices
struct DirectSlice {
    int p = 0, d = 0;
    long dim = 0;
    std::vector<MultiVec> reps;
};
DirectSlice r_cohomology_direct(const MultiVec& Lambda, int p, int d);

// dim_R recovered from the rank bookkeeping of the exact sequence; throws
// ExactnessViolation if it disagrees with the direct computation
long assemble(const SrmiStructure& S, int p, int r);

struct ClassStatus {
    bool cocycle = false;
    bool bounding = false;
};
ClassStatus class_status(const MultiVec& Lambda, const MultiVec& candidate);

// polynomial Casimirs at coefficient degree d: kernel of the coboundary on
// the function slice
std::vector<HomPoly> casimirs(const MultiVec& Lambda, int d);

/* Candidate classes built as products of a degree-(d-p) Casimir with a
 * p-fold wedge of stabilizer fields; each is checked to be a cocycle and
 * tested against the coboundary image. */
struct PreferredClass {
    MultiVec rep;
    bool cocycle = false;
    bool bounding = false;
};
std::vector<PreferredClass> preferred_classes(const MultiVec& Lambda,
                                              const std::vector<ScalarMat>& stab,
                                              int p, int d);

} // namespace quadcoh
