#pragma once
#include <optional>
#include <vector>
#include "quadcoh/scalar.hpp"

namespace quadcoh {

/* Dense matrix over the Gaussian rationals.  Everything downstream (ranks,
 * kernels, cohomology dimensions) reduces to exact row elimination here. */
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

    Scalar& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static Mat identity(int n);
    Mat transpose() const;
    bool is_zero() const;
    bool is_upper_triangular() const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Scalar& c) const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    Mat submatrix(const std::vector<int>& keep_rows, const std::vector<int>& keep_cols) const;
};

Mat hcat(const Mat& A, const Mat& B);
Mat vcat(const Mat& A, const Mat& B);
Mat from_columns(const std::vector<std::vector<Scalar>>& cols, int rows);

/* In-place reduced row echelon form; returns pivot column indices. */
std::vector<int> rref(Mat& M);

int rank(Mat M);

// kernel as a list of column vectors (one per free column of the RREF)
std::vector<std::vector<Scalar>> kernel_basis(const Mat& M);

// one particular solution of Mx = b, if consistent
std::optional<std::vector<Scalar>> solve(const Mat& M, const std::vector<Scalar>& b);

std::optional<Mat> inverse(const Mat& M);

// is v in the column span of A?
bool in_column_span(const Mat& A, const std::vector<Scalar>& v);

/* Growing subspace with O(dim * rank) membership and insertion; rows are kept
 * in echelon form with unit pivots so reduction is a single sweep. */
struct IncrementalSpan {
    int dim = 0;
    std::vector<std::vector<Scalar>> rows;
    std::vector<int> pivots;

    explicit IncrementalSpan(int d) : dim(d) {}
    int rank() const { return (int)rows.size(); }
    // reduces v against the current rows; returns its remainder
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    bool contains(const std::vector<Scalar>& v) const;
    bool add(std::vector<Scalar> v);   // true iff v enlarged the span
};

} // namespace quadcoh
