#include "quadcoh/linalg.hpp"

namespace quadcoh {

Mat Mat::identity(int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = Scalar(1);
    return I;
}

Mat Mat::transpose() const {
    Mat T(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
    return T;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_upper_triangular() const {
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols && j < i; ++j)
            if (!at(i, j).is_zero()) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    Mat R(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Scalar& y = o.at(k, j);
                if (!y.is_zero()) R.at(i, j) += x * y;
            }
        }
    return R;
}

Mat Mat::operator+(const Mat& o) const {
    Mat R(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) R.a[i] = a[i] + o.a[i];
    return R;
}

Mat Mat::operator-(const Mat& o) const {
    Mat R(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) R.a[i] = a[i] - o.a[i];
    return R;
}

Mat Mat::operator*(const Scalar& c) const {
    Mat R(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) R.a[i] = a[i] * c;
    return R;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> r(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const Scalar& x = at(i, j);
            if (!x.is_zero() && !v[j].is_zero()) r[i] += x * v[j];
        }
    return r;
}

Mat Mat::submatrix(const std::vector<int>& keep_rows, const std::vector<int>& keep_cols) const {
    Mat R(int(keep_rows.size()), int(keep_cols.size()));
    for (size_t i = 0; i < keep_rows.size(); ++i)
        for (size_t j = 0; j < keep_cols.size(); ++j) R.at(int(i), int(j)) = at(keep_rows[i], keep_cols[j]);
    return R;
}

Mat hcat(const Mat& A, const Mat& B) {
    Mat R(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) R.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) R.at(i, A.cols + j) = B.at(i, j);
    }
    return R;
}

Mat vcat(const Mat& A, const Mat& B) {
    Mat R(A.rows + B.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) R.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < A.cols; ++j) R.at(A.rows + i, j) = B.at(i, j);
    return R;
}

Mat from_columns(const std::vector<std::vector<Scalar>>& cols, int rows) {
    Mat R(rows, int(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i) R.at(i, int(j)) = cols[j][i];
    return R;
}

std::vector<int> rref(Mat& M) {
    std::vector<int> pivots;
    int prow = 0;
    for (int col = 0; col < M.cols && prow < M.rows; ++col) {
        int sel = -1;
        for (int i = prow; i < M.rows; ++i)
            if (!M.at(i, col).is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != prow)
            for (int j = col; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(prow, j));
        Scalar piv_inv = M.at(prow, col).inv();
        for (int j = col; j < M.cols; ++j)
            if (!M.at(prow, j).is_zero()) M.at(prow, j) = M.at(prow, j) * piv_inv;
        for (int i = 0; i < M.rows; ++i) {
            if (i == prow) continue;
            const Scalar f = M.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < M.cols; ++j) {
                const Scalar& x = M.at(prow, j);
                if (!x.is_zero()) M.at(i, j) -= f * x;
            }
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

int rank(Mat M) { return int(rref(M).size()); }

std::vector<std::vector<Scalar>> kernel_basis(const Mat& M) {
    Mat R = M;
    std::vector<int> piv = rref(R);
    std::vector<bool> is_piv(M.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int fc = 0; fc < M.cols; ++fc) {
        if (is_piv[fc]) continue;
        std::vector<Scalar> v(M.cols);
        v[fc] = Scalar(1);
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -R.at(int(i), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Mat& M, const std::vector<Scalar>& b) {
    Mat Ab(M.rows, M.cols + 1);
    for (int i = 0; i < M.rows; ++i) {
        for (int j = 0; j < M.cols; ++j) Ab.at(i, j) = M.at(i, j);
        Ab.at(i, M.cols) = b[i];
    }
    std::vector<int> piv = rref(Ab);
    if (!piv.empty() && piv.back() == M.cols) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(M.cols);
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = Ab.at(int(i), M.cols);
    return x;
}

std::optional<Mat> inverse(const Mat& M) {
    if (M.rows != M.cols) return std::nullopt;
    Mat W = hcat(M, Mat::identity(M.rows));
    std::vector<int> piv = rref(W);
    if (int(piv.size()) != M.rows || (M.rows > 0 && piv.back() >= M.cols)) return std::nullopt;
    Mat R(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) R.at(i, j) = W.at(i, M.cols + j);
    return R;
}

bool in_column_span(const Mat& A, const std::vector<Scalar>& v) {
    return solve(A, v).has_value();
}

std::vector<Scalar> IncrementalSpan::reduce(std::vector<Scalar> v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
        const Scalar& c = v[pivots[r]];
        if (c.is_zero()) continue;
        Scalar f = c;  // pivots are normalized to 1
        for (int j = pivots[r]; j < dim; ++j)
            if (!rows[r][j].is_zero()) v[j] = v[j] - f * rows[r][j];
    }
    return v;
}

bool IncrementalSpan::contains(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w = reduce(v);
    for (const Scalar& c : w)
        if (!c.is_zero()) return false;
    return true;
}

bool IncrementalSpan::add(std::vector<Scalar> v) {
    if ((int)v.size() != dim) throw MathError("span dimension mismatch");
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < dim; ++j)
        if (!v[j].is_zero()) { p = j; break; }
    if (p < 0) return false;
    Scalar inv = v[p].inv();
    for (int j = p; j < dim; ++j)
        if (!v[j].is_zero()) v[j] = v[j] * inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
}

} // namespace quadcoh
