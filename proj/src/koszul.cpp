#include "quadcoh/koszul.hpp"
#include "quadcoh/errors.hpp"

#include <algorithm>

namespace quadcoh {

GrassmannBasis::GrassmannBasis(int n_) : n(n_) {
    tuples.resize(n + 1);
    for (int p = 0; p <= n; ++p) tuples[p] = increasing_tuples(n, p);
}

int GrassmannBasis::dim(int p) const {
    return (p < 0 || p > n) ? 0 : (int)tuples[p].size();
}

int GrassmannBasis::index_of(int p, const Tuple& t) const {
    const auto& v = tuples[p];
    auto it = std::lower_bound(v.begin(), v.end(), t);
    if (it == v.end() || *it != t) throw MathError("tuple not in basis");
    return (int)(it - v.begin());
}

Mat GrassmannBasis::e_op(int k, int p) const {
    Mat M(dim(p + 1), dim(p));
    if (p < 0 || p + 1 > n) return M;
    for (int c = 0; c < dim(p); ++c) {
        const Tuple& t = tuples[p][c];
        if (std::binary_search(t.begin(), t.end(), k)) continue;
        int before = (int)(std::lower_bound(t.begin(), t.end(), k) - t.begin());
        Tuple u = t;
        u.insert(u.begin() + before, k);
        M.at(index_of(p + 1, u), c) = (before % 2 == 0) ? Scalar(1) : Scalar(-1);
    }
    return M;
}

Mat GrassmannBasis::i_op(int k, int p) const {
    Mat M(dim(p - 1), dim(p));
    if (p <= 0 || p > n) return M;
    for (int c = 0; c < dim(p); ++c) {
        const Tuple& t = tuples[p][c];
        auto it = std::lower_bound(t.begin(), t.end(), k);
        if (it == t.end() || *it != k) continue;
        int pos = (int)(it - t.begin());
        Tuple u = t;
        u.erase(u.begin() + pos);
        M.at(index_of(p - 1, u), c) = (pos % 2 == 0) ? Scalar(1) : Scalar(-1);
    }
    return M;
}

Mat OperatorTuple::op(int k) const {
    Mat M = mats[k];
    if (!shift.empty() && !shift[k].is_zero())
        for (int i = 0; i < N; ++i) M.at(i, i) = M.at(i, i) - shift[k];
    return M;
}

OperatorTuple make_operator_tuple(std::vector<Mat> mats, std::vector<Scalar> shift,
                                  std::vector<std::string> basis_names) {
    OperatorTuple T;
    T.count = (int)mats.size();
    if (T.count == 0) throw MathError("empty operator family");
    T.N = mats[0].rows;
    for (const Mat& m : mats)
        if (m.rows != T.N || m.cols != T.N) throw MathError("operator shapes differ");
    if (!shift.empty() && (int)shift.size() != T.count)
        throw MathError("shift length differs from operator count");
    if (!basis_names.empty() && (int)basis_names.size() != T.N)
        throw MathError("basis naming has wrong length");
    T.mats = std::move(mats);
    T.shift = std::move(shift);
    T.basis_names = std::move(basis_names);
    // shifts are scalar, so commutation of the effective family reduces to
    // commutation of the raw matrices
    for (int i = 0; i < T.count; ++i)
        for (int j = i + 1; j < T.count; ++j)
            if (!(T.mats[i] * T.mats[j] == T.mats[j] * T.mats[i]))
                throw NonCommuting(i + 1, j + 1);
    return T;
}

Mat tensor_op(const Mat& A, const Mat& T, int N) {
    Mat M(T.rows * N, T.cols * N);
    for (int tq = 0; tq < T.rows; ++tq)
        for (int tp = 0; tp < T.cols; ++tp) {
            const Scalar& s = T.at(tq, tp);
            if (s.is_zero()) continue;
            for (int r = 0; r < N; ++r)
                for (int c = 0; c < N; ++c) {
                    const Scalar& a = A.at(r, c);
                    if (!a.is_zero()) M.at(tq * N + r, tp * N + c) = M.at(tq * N + r, tp * N + c) + s * a;
                }
        }
    return M;
}

Mat linvf_matrix(const ScalarMat& Y, int n, int r) {
    auto mons = monomial_basis(n, r);
    Mat M((int)mons.size(), (int)mons.size());
    for (size_t c = 0; c < mons.size(); ++c) {
        HomPoly img = apply_linvf(Y, monomial(n, mons[c]));
        for (const auto& [mi, coeff] : img.terms) {
            auto it = std::lower_bound(mons.begin(), mons.end(), mi);
            M.at((int)(it - mons.begin()), (int)c) = coeff;
        }
    }
    return M;
}

Mat koszul_cochain_matrix(const OperatorTuple& X, int p) {
    GrassmannBasis G(X.count);
    Mat M(G.dim(p + 1) * X.N, G.dim(p) * X.N);
    for (int k = 0; k < X.count; ++k)
        M = M + tensor_op(X.op(k), G.e_op(k, p), X.N);
    return M;
}

Mat koszul_chain_matrix(const OperatorTuple& Y, int p) {
    GrassmannBasis G(Y.count);
    Mat M(G.dim(p - 1) * Y.N, G.dim(p) * Y.N);
    for (int k = 0; k < Y.count; ++k)
        M = M + tensor_op(Y.op(k), G.i_op(k, p), Y.N);
    return M;
}

KoszulCohomology koszul_cohomology(const OperatorTuple& X, bool with_reps) {
    int n = X.count;
    KoszulCohomology H;
    H.dims.assign(n + 1, 0);
    H.reps.resize(n + 1);
    Mat prev;  // cochain matrix one level down
    for (int p = 0; p <= n; ++p) {
        Mat d = koszul_cochain_matrix(X, p);
        auto Z = kernel_basis(d);
        IncrementalSpan span(d.cols);
        if (p > 0)
            for (int c = 0; c < prev.cols; ++c) {
                std::vector<Scalar> col(prev.rows);
                for (int r = 0; r < prev.rows; ++r) col[r] = prev.at(r, c);
                span.add(std::move(col));
            }
        long boundary_rank = span.rank();
        for (auto& z : Z)
            if (span.add(z)) {
                if (with_reps) H.reps[p].push_back(std::move(z));
            }
        H.dims[p] = (long)span.rank() - boundary_rank;
        prev = std::move(d);
    }
    return H;
}

bool homotopy_check(const OperatorTuple& X, const OperatorTuple& Y) {
    if (X.count != Y.count || X.N != Y.N) throw MathError("family shapes differ");
    int n = X.count, N = X.N;
    GrassmannBasis G(n);

    Mat YX(N, N);
    for (int l = 0; l < n; ++l) YX = YX + Y.op(l) * X.op(l);
    std::vector<std::vector<Mat>> comm(n, std::vector<Mat>(n));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            comm[k][l] = X.op(k) * Y.op(l) - Y.op(l) * X.op(k);

    for (int p = 0; p <= n; ++p) {
        int D = G.dim(p) * N;
        Mat lhs(D, D);
        if (p < n) lhs = lhs + koszul_chain_matrix(Y, p + 1) * koszul_cochain_matrix(X, p);
        if (p > 0) lhs = lhs + koszul_cochain_matrix(X, p - 1) * koszul_chain_matrix(Y, p);
        Mat rhs = tensor_op(YX, Mat::identity(G.dim(p)), N);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                if (comm[k][l].is_zero()) continue;
                rhs = rhs + tensor_op(comm[k][l], G.e_op(k, p - 1) * G.i_op(l, p), N);
            }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace quadcoh
