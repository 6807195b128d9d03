#include "quadcoh/frames.hpp"
#include "quadcoh/errors.hpp"

#include <algorithm>

namespace quadcoh {

static ScalarMat mat_mul(const ScalarMat& A, const ScalarMat& B) {
    int n = (int)A.size();
    ScalarMat C(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (A[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j)
                C[i][j] = C[i][j] + A[i][k] * B[k][j];
        }
    return C;
}

static bool mats_commute(const ScalarMat& A, const ScalarMat& B) {
    ScalarMat AB = mat_mul(A, B), BA = mat_mul(B, A);
    for (size_t i = 0; i < AB.size(); ++i)
        for (size_t j = 0; j < AB.size(); ++j)
            if (!(AB[i][j] - BA[i][j]).is_zero()) return false;
    return true;
}

LinFrame build_frame(const std::vector<ScalarMat>& mats) {
    LinFrame f;
    f.n = (int)mats.size();
    if (f.n == 0) throw MathError("empty frame");
    for (const auto& m : mats)
        if ((int)m.size() != f.n || (int)m[0].size() != f.n)
            throw MathError("frame matrix has wrong shape");
    for (int i = 0; i < f.n; ++i)
        for (int j = i + 1; j < f.n; ++j)
            if (!mats_commute(mats[i], mats[j])) throw NonCommuting(i + 1, j + 1);
    f.mats = mats;

    f.ell.assign(f.n, std::vector<HomPoly>(f.n, HomPoly(f.n, 1)));
    for (int i = 0; i < f.n; ++i)
        for (int r = 0; r < f.n; ++r) {
            HomPoly c(f.n, 1);
            for (int p = 0; p < f.n; ++p)
                if (!mats[i][r][p].is_zero()) {
                    MultiIndex e(f.n, 0);
                    e[p] = 1;
                    c.add_term(e, mats[i][r][p]);
                }
            f.ell[i][r] = c;
        }

    f.D = poly_det(f.ell);
    if (f.D.terms.empty()) throw DegenerateFrame();

    for (int i = 0; i < f.n; ++i) {
        Scalar tr;
        for (int k = 0; k < f.n; ++k) tr = tr + mats[i][k][k];
        f.divs.push_back(tr);
    }
    // D is a joint eigenvector: Y_i D = (div Y_i) D.
    for (int i = 0; i < f.n; ++i) {
        HomPoly lhs = apply_linvf(mats[i], f.D);
        HomPoly rhs = f.divs[i] * f.D;
        if (!(lhs - rhs).terms.empty())
            throw MathError("frame determinant is not a joint eigenvector");
    }
    return f;
}

MultiVec frame_field(const LinFrame& f, int i) {
    MultiVec v(f.n, 1, 1);
    for (int r = 0; r < f.n; ++r) v.add_comp({r}, f.ell[i][r]);
    return v;
}

MultiVec frame_wedge(const LinFrame& f, const Tuple& k) {
    if (k.empty()) throw MathError("frame_wedge needs a nonempty tuple");
    MultiVec v = frame_field(f, k[0]);
    for (size_t a = 1; a < k.size(); ++a) v = wedge(v, frame_field(f, k[a]));
    return v;
}

HomPoly poly_det(const std::vector<std::vector<HomPoly>>& M) {
    int m = (int)M.size();
    int n = M.empty() ? 0 : M[0][0].n;
    if (m == 0) throw MathError("poly_det of empty matrix");
    if (m == 1) return M[0][0];
    int ed = M[0][0].deg;
    HomPoly acc(n, ed * m);
    for (int i = 0; i < m; ++i) {
        if (M[i][0].terms.empty()) continue;
        std::vector<std::vector<HomPoly>> sub;
        for (int r = 0; r < m; ++r) {
            if (r == i) continue;
            sub.push_back(std::vector<HomPoly>(M[r].begin() + 1, M[r].end()));
        }
        HomPoly t = M[i][0] * poly_det(sub);
        acc = (i % 2 == 0) ? acc + t : acc - t;
    }
    return acc;
}

HomPoly minor_keep(const std::vector<std::vector<HomPoly>>& M,
                   const Tuple& rows, const Tuple& cols) {
    if (rows.size() != cols.size()) throw MathError("minor tuples differ in length");
    int ed = M[0][0].deg;
    int vn = M[0][0].n;
    if (rows.empty()) return constant_poly(vn, Scalar(1));
    std::vector<std::vector<HomPoly>> sub(rows.size(), std::vector<HomPoly>(cols.size(), HomPoly(vn, ed)));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            sub[i][j] = M[rows[i]][cols[j]];
    return poly_det(sub);
}

HomPoly minor_del(const std::vector<std::vector<HomPoly>>& M,
                  const Tuple& rows, const Tuple& cols) {
    if (rows.size() != cols.size()) throw MathError("minor tuples differ in length");
    int n = (int)M.size();
    Tuple krows, kcols;
    for (int i = 0; i < n; ++i)
        if (!std::binary_search(rows.begin(), rows.end(), i)) krows.push_back(i);
    for (int j = 0; j < n; ++j)
        if (!std::binary_search(cols.begin(), cols.end(), j)) kcols.push_back(j);
    return minor_keep(M, krows, kcols);
}

MinorTables minor_tables(const LinFrame& f) {
    MinorTables t;
    t.n = f.n;
    t.L.assign(f.n, std::vector<HomPoly>(f.n, HomPoly(f.n, f.n - 1)));
    t.Lsigned = t.L;
    for (int i = 0; i < f.n; ++i)
        for (int j = 0; j < f.n; ++j) {
            t.L[i][j] = minor_del(f.ell, {i}, {j});
            t.Lsigned[i][j] = ((i + j) % 2 == 0) ? t.L[i][j] : Scalar(-1) * t.L[i][j];
        }
    return t;
}

static HomPoly poly_pow(const HomPoly& b, int e, int n) {
    HomPoly r = constant_poly(n, Scalar(1));
    for (int i = 0; i < e; ++i) r = r * b;
    return r;
}

bool verify_minor_identities(const std::vector<std::vector<HomPoly>>& ell,
                             const HomPoly& D, int m) {
    int n = int(ell.size());
    int vn = D.n;
    if (m < 0 || m > n) throw MathError("minor identities: bad order");
    // first-minor table of ell, unsigned
    std::vector<std::vector<HomPoly>> L(n, std::vector<HomPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) L[i][j] = minor_del(ell, {i}, {j});
    auto tuples = increasing_tuples(n, m);
    for (const Tuple& bi : tuples)
        for (const Tuple& bj : tuples) {
            // minors of the first-minor table against complementary minors of ell
            HomPoly del_L = minor_del(L, bi, bj);
            HomPoly keep_l = minor_keep(ell, bi, bj);
            if (n - m - 1 >= 0) {
                if (!(del_L - poly_pow(D, n - m - 1, vn) * keep_l).terms.empty()) return false;
            } else {
                if (!(D * del_L - keep_l).terms.empty()) return false;
            }
            HomPoly keep_L = minor_keep(L, bi, bj);
            HomPoly del_l = minor_del(ell, bi, bj);
            if (m - 1 >= 0) {
                if (!(keep_L - poly_pow(D, m - 1, vn) * del_l).terms.empty()) return false;
            } else {
                if (!(D * keep_L - del_l).terms.empty()) return false;
            }
        }
    return true;
}

bool verify_minor_lemma(const LinFrame& f, int m) {
    return verify_minor_identities(f.ell, f.D, m);
}

MultiVec expand_srmi(const ScalarMat& alpha, const LinFrame& frame) {
    int n = frame.n;
    MultiVec L(n, 2, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (alpha[i][j].is_zero()) continue;
            L = L + alpha[i][j] * frame_wedge(frame, {i, j});
        }
    return L;
}

SrmiStructure make_srmi(const ScalarMat& alpha, const LinFrame& frame) {
    int n = frame.n;
    if ((int)alpha.size() != n) throw MathError("alpha has wrong size");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(alpha[i][j] + alpha[j][i]).is_zero())
                throw MathError("alpha is not skew-symmetric");
    SrmiStructure S;
    S.frame = frame;
    S.alpha = alpha;
    S.Lambda = expand_srmi(alpha, frame);
    if (!is_poisson(S.Lambda)) throw NotPoisson();
    for (int i = 0; i < n; ++i) {
        ScalarMat Xi(n, std::vector<Scalar>(n));
        Scalar di;
        for (int j = 0; j < n; ++j) {
            if (alpha[i][j].is_zero()) continue;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    Xi[a][b] = Xi[a][b] + alpha[i][j] * frame.mats[j][a][b];
            di = di + alpha[i][j] * frame.divs[j];
        }
        S.X.push_back(Xi);
        S.delta.push_back(di);
    }
    return S;
}

bool curl_formula_check(const SrmiStructure& S) {
    MultiVec lhs = curl(S.Lambda);
    MultiVec rhs(S.frame.n, 1, 1);
    for (int i = 0; i < S.frame.n; ++i)
        rhs = rhs + S.delta[i] * frame_field(S.frame, i);
    return lhs == rhs;
}

MultiVec j1(const ScalarMat& a) {
    int n = (int)a.size();
    MultiVec v(n, 1, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!a[i][j].is_zero()) {
                MultiIndex e(n, 0);
                e[i] = 1;
                HomPoly p(n, 1);
                p.add_term(e, a[i][j]);
                v.add_comp({j}, p);
            }
    return v;
}

MultiVec j2(const ScalarMat& a, const ScalarMat& b) { return wedge(j1(a), j1(b)); }

std::vector<Scalar> mv_coords(const MultiVec& v, int p, int deg) {
    auto tuples = increasing_tuples(v.n, p);
    auto mons = monomial_basis(v.n, deg);
    std::vector<Scalar> out;
    out.reserve(tuples.size() * mons.size());
    for (const Tuple& t : tuples) {
        HomPoly c = v.comp(t);
        for (const MultiIndex& m : mons) {
            auto it = c.terms.find(m);
            out.push_back(it == c.terms.end() ? Scalar() : it->second);
        }
    }
    return out;
}

std::vector<ScalarMat> stabilizer(const MultiVec& Lambda) {
    int n = Lambda.n;
    // columns: [Lambda, j1(E_ij)] flattened over the bivector slice of its degree
    int cols = n * n;
    std::vector<std::vector<Scalar>> colv;
    int outdeg = Lambda.deg;            // bracket with a linear field keeps degree
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ScalarMat E(n, std::vector<Scalar>(n));
            E[i][j] = Scalar(1);
            MultiVec br = schouten(Lambda, j1(E));
            colv.push_back(mv_coords(br, Lambda.p, outdeg));
        }
    int rows = (int)colv[0].size();
    Mat M(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) M.at(r, c) = colv[c][r];
    std::vector<std::vector<Scalar>> ker = kernel_basis(M);
    std::vector<ScalarMat> out;
    for (const auto& v : ker) {
        ScalarMat a(n, std::vector<Scalar>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = v[i * n + j];
        out.push_back(a);
    }
    return out;
}

bool j2_image_membership(const MultiVec& Lambda, const std::vector<ScalarMat>& stab) {
    int n = Lambda.n;
    std::vector<std::vector<Scalar>> cols;
    for (size_t a = 0; a < stab.size(); ++a)
        for (size_t b = a + 1; b < stab.size(); ++b)
            cols.push_back(mv_coords(j2(stab[a], stab[b]), 2, 2));
    std::vector<Scalar> target = mv_coords(Lambda, 2, 2);
    if (cols.empty()) {
        for (const Scalar& s : target)
            if (!s.is_zero()) return false;
        return true;
    }
    Mat M((int)target.size(), (int)cols.size());
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < cols[c].size(); ++r) M.at((int)r, (int)c) = cols[c][r];
    return in_column_span(M, target);
}

} // namespace quadcoh
