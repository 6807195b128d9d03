#include "quadcoh/spectral.hpp"
#include "quadcoh/errors.hpp"

#include <algorithm>

namespace quadcoh {

namespace {

Mat to_mat(const ScalarMat& m) {
    Mat M((int)m.size(), (int)m[0].size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) M.at((int)i, (int)j) = m[i][j];
    return M;
}

std::string mono_name(const MultiIndex& b) {
    std::string s;
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += "z" + std::to_string(i + 1);
        if (b[i] > 1) s += "^" + std::to_string(b[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace

SpectrumReport frame_spectrum(const SrmiStructure& S) {
    std::vector<Mat> mats;
    for (const auto& a : S.frame.mats) mats.push_back(to_mat(a));
    return simultaneous_triangularize(mats);
}

OperatorTuple induced_triangular_ops(const SrmiStructure& S, int r) {
    SpectrumReport rep = frame_spectrum(S);
    if (!rep.ok) throw TriangularizationFailed();
    int n = S.frame.n;
    auto mons = monomial_basis(n, r);
    int N = (int)mons.size();
    Mat alphaB = to_mat(S.alpha) * rep.B;

    std::vector<Mat> T(n, Mat(N, N));
    std::vector<std::string> names;
    for (const auto& b : mons) names.push_back(mono_name(b));
    for (int q = 0; q < N; ++q) {
        const MultiIndex& beta = mons[q];
        for (int j = 0; j < n; ++j) {
            Scalar diag;
            for (int m = 0; m < n; ++m)
                diag = diag + alphaB.at(j, m) * Scalar(beta[m] - 1);
            T[j].at(q, q) = T[j].at(q, q) + diag;
        }
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m) {
                if (beta[m] == 0) continue;
                for (int p = m + 1; p < n; ++p) {
                    const Scalar& c = rep.upper[k].at(m, p);
                    if (c.is_zero()) continue;
                    MultiIndex shifted = beta;
                    shifted[m] -= 1;
                    shifted[p] += 1;
                    auto it = std::lower_bound(mons.begin(), mons.end(), shifted);
                    int row = (int)(it - mons.begin());
                    for (int j = 0; j < n; ++j) {
                        const Scalar& al = S.alpha[j][k];
                        if (al.is_zero()) continue;
                        T[j].at(row, q) = T[j].at(row, q) + al * c * Scalar(beta[m]);
                    }
                }
            }
    }
    for (const Mat& t : T)
        if (!t.is_upper_triangular()) throw MathError("induced operator lost triangularity");
    return make_operator_tuple(std::move(T), {}, std::move(names));
}

SpectrumReport joint_spectrum(const SrmiStructure& S, int r) {
    OperatorTuple T = induced_triangular_ops(S, r);
    SpectrumReport rep;
    rep.ok = true;
    rep.U = Mat::identity(T.N);
    rep.Uinv = rep.U;
    rep.B = Mat(T.count, T.N);
    for (int j = 0; j < T.count; ++j) {
        for (int i = 0; i < T.N; ++i) rep.B.at(j, i) = T.mats[j].at(i, i);
        rep.upper.push_back(T.mats[j]);
    }
    for (int i = 0; i < T.N; ++i) {
        std::vector<Scalar> tup(T.count);
        for (int j = 0; j < T.count; ++j) tup[j] = T.mats[j].at(i, i);
        rep.spectrum[tup]++;
    }
    return rep;
}

std::map<std::vector<Scalar>, int> spectrum_formula(const SrmiStructure& S, int r) {
    SpectrumReport rep = frame_spectrum(S);
    if (!rep.ok) throw TriangularizationFailed();
    int n = S.frame.n;
    Mat alphaB = to_mat(S.alpha) * rep.B;
    std::map<std::vector<Scalar>, int> out;
    for (const MultiIndex& beta : monomial_basis(n, r)) {
        std::vector<Scalar> tup(n);
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < n; ++m)
                tup[j] = tup[j] + alphaB.at(j, m) * Scalar(beta[m] - 1);
        out[tup]++;
    }
    return out;
}

std::vector<MultiIndex> kernel_exponents(const SrmiStructure& S, int r) {
    SpectrumReport rep = frame_spectrum(S);
    if (!rep.ok) throw TriangularizationFailed();
    int n = S.frame.n;
    Mat alphaB = to_mat(S.alpha) * rep.B;
    std::vector<MultiIndex> out;
    for (const MultiIndex& beta : monomial_basis(n, r)) {
        bool zero = true;
        for (int j = 0; j < n && zero; ++j) {
            Scalar v;
            for (int m = 0; m < n; ++m) v = v + alphaB.at(j, m) * Scalar(beta[m] - 1);
            zero = v.is_zero();
        }
        if (zero) {
            MultiIndex I = beta;
            for (int& e : I) e -= 1;
            out.push_back(std::move(I));
        }
    }
    return out;
}

KernelTower kernel_tower(const OperatorTuple& T) {
    // a scalar shift only moves the diagonal, so checking the raw matrices suffices
    for (const Mat& m : T.mats)
        if (!m.is_upper_triangular()) throw NotTriangular();
    int n = T.count, N = T.N;
    KernelTower tower;
    for (int i = 0; i < N; ++i) {
        bool zero = true;
        for (int j = 0; j < n; ++j) zero = zero && T.op(j).at(i, i).is_zero();
        if (zero) tower.mu++;
    }

    std::vector<Mat> cur;
    for (int j = 0; j < n; ++j) cur.push_back(T.op(j));
    std::vector<int> coords(N);
    for (int i = 0; i < N; ++i) coords[i] = i;

    long found = 0;
    while (true) {
        int m = (int)coords.size();
        Mat stacked(0, m);
        for (const Mat& c : cur) stacked = vcat(stacked, c);
        auto K = kernel_basis(stacked);
        if (K.empty()) break;

        // reversed echelon normalization: pivots become the last nonzero rows
        Mat R((int)K.size(), m);
        for (size_t i = 0; i < K.size(); ++i)
            for (int j = 0; j < m; ++j) R.at((int)i, j) = K[i][m - 1 - j];
        rref(R);
        std::vector<std::pair<int, std::vector<Scalar>>> rows;  // (pivot, vector)
        for (size_t i = 0; i < K.size(); ++i) {
            std::vector<Scalar> v(m);
            int piv = -1;
            for (int j = 0; j < m; ++j) {
                v[m - 1 - j] = R.at((int)i, j);
                if (piv < 0 && !R.at((int)i, j).is_zero()) piv = m - 1 - j;
            }
            if (piv < 0) throw MathError("kernel normalization lost a vector");
            rows.push_back({piv, std::move(v)});
        }
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        std::vector<int> stage_pivots;
        std::vector<std::vector<Scalar>> lifted;
        for (auto& [piv, v] : rows) {
            for (int j = 0; j < n; ++j)
                if (!cur[j].at(piv, piv).is_zero())
                    throw MathError("kernel pivot off the zero-diagonal lines");
            stage_pivots.push_back(piv);
            std::vector<Scalar> lift(N);
            for (int i = 0; i < m; ++i) lift[coords[i]] = v[i];
            lifted.push_back(std::move(lift));
            tower.pivots.push_back(coords[piv]);
        }
        tower.kernels.push_back(std::move(lifted));
        tower.kernel_dims.push_back((int)rows.size());
        tower.s++;
        found += (long)rows.size();

        std::vector<int> rest;
        for (int i = 0; i < m; ++i)
            if (!std::binary_search(stage_pivots.begin(), stage_pivots.end(), i))
                rest.push_back(i);
        std::vector<Mat> nxt;
        for (int j = 0; j < n; ++j) {
            Mat Rj((int)rest.size(), (int)rest.size());
            for (size_t cc = 0; cc < rest.size(); ++cc) {
                std::vector<Scalar> v(m);
                for (int i = 0; i < m; ++i) v[i] = cur[j].at(i, rest[cc]);
                for (auto& [piv, kv] : rows) {
                    const Scalar& f = v[piv];
                    if (f.is_zero()) continue;
                    Scalar fc = f;  // pivot entries of kv are 1
                    for (int i = 0; i < m; ++i)
                        if (!kv[i].is_zero()) v[i] = v[i] - fc * kv[i];
                }
                for (int p : stage_pivots)
                    if (!v[p].is_zero()) throw MathError("kernel projection failed");
                for (size_t rr = 0; rr < rest.size(); ++rr) Rj.at((int)rr, (int)cc) = v[rest[rr]];
            }
            if (!Rj.is_upper_triangular()) throw MathError("tower reduction lost triangularity");
            nxt.push_back(std::move(Rj));
        }
        std::vector<int> ncoords;
        for (int i : rest) ncoords.push_back(coords[i]);
        coords = std::move(ncoords);
        cur = std::move(nxt);
    }

    tower.terminal = coords;
    if (found != tower.mu)
        throw MathError("tower dimensions do not sum to the zero-line count");
    return tower;
}

ReducedCocycle reduce_cocycle(const OperatorTuple& T, const KernelTower& tower,
                              const std::vector<Scalar>& cocycle, int p) {
    int n = T.count, N = T.N;
    GrassmannBasis G(n);
    if ((int)cocycle.size() != G.dim(p) * N) throw MathError("cocycle has wrong length");
    Mat dp = koszul_cochain_matrix(T, p);
    for (const Scalar& c : dp.apply(cocycle))
        if (!c.is_zero()) throw NotACocycle();

    // adapted basis: tower kernels first, then the terminal unit vectors
    std::vector<std::vector<Scalar>> cols;
    for (const auto& stage : tower.kernels)
        for (const auto& v : stage) cols.push_back(v);
    long mu = (long)cols.size();
    for (int r : tower.terminal) {
        std::vector<Scalar> e(N);
        e[r] = Scalar(1);
        cols.push_back(std::move(e));
    }
    Mat A = from_columns(cols, N);
    auto Ainv_opt = inverse(A);
    if (!Ainv_opt) throw MathError("tower basis is not invertible");
    Mat Ainv = *Ainv_opt;

    int F = (int)tower.terminal.size();
    ReducedCocycle out;
    out.witness.assign(size_t(G.dim(p - 1)) * N, Scalar());
    if (F > 0 && p > 0) {
        std::vector<int> fcoords;
        for (int i = 0; i < F; ++i) fcoords.push_back((int)mu + i);
        std::vector<Mat> XF;
        for (int j = 0; j < n; ++j) {
            Mat C = Ainv * T.op(j) * A;
            // the tower span is invariant, so the lower-left block must vanish
            for (int i = (int)mu; i < N; ++i)
                for (int jj = 0; jj < (int)mu; ++jj)
                    if (!C.at(i, jj).is_zero())
                        throw MathError("tower span is not invariant");
            XF.push_back(C.submatrix(fcoords, fcoords));
        }
        OperatorTuple TF = make_operator_tuple(std::move(XF));

        // componentwise projection of the cocycle onto the terminal block
        std::vector<Scalar> CF(size_t(G.dim(p)) * F);
        for (int t = 0; t < G.dim(p); ++t) {
            std::vector<Scalar> block(N);
            for (int i = 0; i < N; ++i) block[i] = cocycle[size_t(t) * N + i];
            std::vector<Scalar> y = Ainv.apply(block);
            for (int i = 0; i < F; ++i) CF[size_t(t) * F + i] = y[mu + i];
        }
        bool cf_zero = true;
        for (const Scalar& c : CF) cf_zero = cf_zero && c.is_zero();
        if (!cf_zero) {
            Mat KF = koszul_cochain_matrix(TF, p - 1);
            auto w = solve(KF, CF);
            if (!w) throw MathError("terminal complex failed to be acyclic");
            for (int t = 0; t < G.dim(p - 1); ++t)
                for (int i = 0; i < F; ++i)
                    out.witness[size_t(t) * N + tower.terminal[i]] = (*w)[size_t(t) * F + i];
        }
    }

    std::vector<Scalar> shiftv;
    if (p > 0) shiftv = koszul_cochain_matrix(T, p - 1).apply(out.witness);
    else shiftv.assign(cocycle.size(), Scalar());
    out.reduced.resize(cocycle.size());
    for (size_t i = 0; i < cocycle.size(); ++i) out.reduced[i] = cocycle[i] - shiftv[i];

    // postconditions: still a cocycle, terminal block gone
    for (const Scalar& c : dp.apply(out.reduced))
        if (!c.is_zero()) throw MathError("reduction broke the cocycle");
    for (int t = 0; t < G.dim(p); ++t) {
        std::vector<Scalar> block(N);
        for (int i = 0; i < N; ++i) block[i] = out.reduced[size_t(t) * N + i];
        std::vector<Scalar> y = Ainv.apply(block);
        for (int i = 0; i < F; ++i)
            if (!y[mu + i].is_zero()) throw MathError("reduction left a terminal component");
    }
    return out;
}

bool complement_kernel_check(const OperatorTuple& T) {
    bool all = true;
    for (int l = 0; l < T.count; ++l) {
        Mat M = T.op(l);
        auto K = kernel_basis(M);
        Mat KM = K.empty() ? M : hcat(from_columns(K, T.N), M);
        if (rank(KM) != T.N) { all = false; break; }
    }
    if (!all) return false;
    bool tri = true;
    for (const Mat& m : T.mats) tri = tri && m.is_upper_triangular();
    if (tri) {
        KernelTower tw = kernel_tower(T);
        if (tw.s > 1)
            throw MathError("supplementary kernels must stop the tower after one stage");
    }
    return true;
}

} // namespace quadcoh
