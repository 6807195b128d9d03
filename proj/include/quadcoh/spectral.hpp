#pragma once

#include "quadcoh/frames.hpp"
#include "quadcoh/koszul.hpp"
#include "quadcoh/triangular.hpp"

namespace quadcoh {

// simultaneous triangularization of the frame matrices of S
SpectrumReport frame_spectrum(const SrmiStructure& S);

/* Operators of the (divergence-shifted) modular family on degree-r monomials
 * in the triangularizing coordinates, assembled from the weight formula: the
 * diagonal entry at exponent beta is (alpha B (beta - 1))_j, and the strict
 * upper part of the conjugated frame matrices couples beta to
 * beta - e_m + e_p.  Upper triangular in the ascending monomial order by
 * construction; throws TriangularizationFailed when the frame spectra do not
 * split over Q(i). */
OperatorTuple induced_triangular_ops(const SrmiStructure& S, int r);

// diagonal read of the induced operators at degree r
SpectrumReport joint_spectrum(const SrmiStructure& S, int r);

// the closed-form multiset {alpha B I : I >= -1 entrywise, |I| = r - n}
std::map<std::vector<Scalar>, int> spectrum_formula(const SrmiStructure& S, int r);

// shifted index sets I = beta - (1,...,1) of the degree-r monomial lines whose
// full diagonal tuple vanishes; their count is the multiplicity mu
std::vector<MultiIndex> kernel_exponents(const SrmiStructure& S, int r);

struct KernelTower {
    int s = 0;                // stages with nonzero joint kernel
    long mu = 0;              // input lines with fully vanishing diagonal tuple
    std::vector<int> kernel_dims;                           // d_1..d_s
    std::vector<std::vector<std::vector<Scalar>>> kernels;  // stage bases lifted to E
    std::vector<int> pivots;                                // pivot coordinates of all stages
    std::vector<int> terminal;                              // coordinates of the final complement
};

/* Iterated joint kernels of an upper-triangular family: take the joint
 * kernel, normalize it to reversed echelon form, project onto the non-pivot
 * coordinates, repeat.  Verifies that every kernel pivot lies on a fully-zero
 * diagonal line and that the stage dimensions sum to mu. */
KernelTower kernel_tower(const OperatorTuple& T);

struct ReducedCocycle {
    std::vector<Scalar> reduced;   // cohomologous, supported on the tower span
    std::vector<Scalar> witness;   // input - reduced = (coboundary of witness)
};
ReducedCocycle reduce_cocycle(const OperatorTuple& T, const KernelTower& tower,
                              const std::vector<Scalar>& cocycle, int p);

/* Is ker(T_l) + im(T_l) = E for every member?  For triangular families a
 * positive answer forces the tower to stop after one stage, which is
 * asserted. */
bool complement_kernel_check(const OperatorTuple& T);

} // namespace quadcoh
