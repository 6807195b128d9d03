#pragma once

#include "quadcoh/linalg.hpp"
#include "quadcoh/multivec.hpp"

#include <string>
#include <vector>

namespace quadcoh {

/* Signed insertion/deletion bookkeeping on the increasing-tuple bases of the
 * exterior algebra of R^n.  e_op(k) wedges the k-th generator in front (with
 * the sign of sorting it into place), i_op(k) contracts it out. */
struct GrassmannBasis {
    int n = 0;
    std::vector<std::vector<Tuple>> tuples;

    GrassmannBasis() = default;
    explicit GrassmannBasis(int n_);

    int dim(int p) const;
    int index_of(int p, const Tuple& t) const;
    Mat e_op(int k, int p) const;   // ^p -> ^{p+1}
    Mat i_op(int k, int p) const;   // ^p -> ^{p-1}
};

/* A family of commuting N x N operators on a module E with a named basis.
 * The k-th effective operator is mats[k] - shift[k]*id; the shift is how
 * modular weights enter the complexes below. */
struct OperatorTuple {
    int count = 0;
    int N = 0;
    std::vector<Mat> mats;
    std::vector<Scalar> shift;              // empty = no shift
    std::vector<std::string> basis_names;   // may be empty

    Mat op(int k) const;
};

// verifies shapes and pairwise commutation of the effective operators
OperatorTuple make_operator_tuple(std::vector<Mat> mats,
                                  std::vector<Scalar> shift = {},
                                  std::vector<std::string> basis_names = {});

// A (x) T acting on E (x) ^*, basis index = tuple_index * N + module_index
Mat tensor_op(const Mat& A, const Mat& T, int N);

// matrix of the linear vector field Y on the ascending degree-r monomial basis
Mat linvf_matrix(const ScalarMat& Y, int n, int r);

// sum_k op(k) (x) e_k : E (x) ^p -> E (x) ^{p+1}
Mat koszul_cochain_matrix(const OperatorTuple& X, int p);
// sum_k op(k) (x) i_k : E (x) ^p -> E (x) ^{p-1}
Mat koszul_chain_matrix(const OperatorTuple& Y, int p);

struct KoszulCohomology {
    std::vector<long> dims;                              // indexed by p = 0..count
    std::vector<std::vector<std::vector<Scalar>>> reps;  // cocycle representatives per p
};

// cohomology of the cochain complex of X, with representatives completing the
// coboundary space inside each cocycle space
KoszulCohomology koszul_cohomology(const OperatorTuple& X, bool with_reps = true);

/* The anticommutator of the cochain complex of X with the chain complex of Y
 * equals sum_l (Y_l X_l) (x) id plus the commutator correction
 * sum_{k,l} [X_k, Y_l] (x) (e_k i_l); holds level by level with no
 * commutation assumptions.  Returns true iff the identity checks on every p. */
bool homotopy_check(const OperatorTuple& X, const OperatorTuple& Y);

} // namespace quadcoh
