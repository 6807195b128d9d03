#pragma once

#include "quadcoh/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quadcoh {

// univariate polynomial over the Gaussian rationals, ascending coefficients
using Poly1 = std::vector<Scalar>;

// monic characteristic polynomial, computed by the trace recursion
Poly1 charpoly(const Mat& A);

Scalar poly1_eval(const Poly1& p, const Scalar& x);

// exact square root in Q(i), when one exists
std::optional<Scalar> qi_sqrt(const Scalar& s);

/* All roots in Q(i) with multiplicity (order: as found).  Returns nothing when
 * the polynomial does not split over Q(i).  Complete for real coefficients up
 * to degree 4 (rational roots, conjugate-pair quadratics, quartic splitting
 * into rational quadratics) and for degree <= 2 otherwise; larger non-real
 * remainders are reported as non-split. */
std::optional<std::vector<Scalar>> qi_roots(const Poly1& p);

/* Result of conjugating a commuting family to simultaneous upper-triangular
 * form over Q(i).  B collects the diagonals (row k = diagonal of upper[k]);
 * the spectrum is the multiset of joint diagonal tuples, one per line. */
struct SpectrumReport {
    bool ok = false;
    std::string failure;
    Mat U, Uinv;
    std::vector<Mat> upper;
    Mat B;
    std::map<std::vector<Scalar>, int> spectrum;
};

// succeeds precisely when every characteristic polynomial splits over Q(i);
// throws NonCommuting for a non-commuting family
SpectrumReport simultaneous_triangularize(const std::vector<Mat>& mats);

} // namespace quadcoh
