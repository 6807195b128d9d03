#include "quadcoh/triangular.hpp"
#include "quadcoh/errors.hpp"

#include <algorithm>
#include <array>

namespace quadcoh {

Poly1 charpoly(const Mat& A) {
    if (A.rows != A.cols) throw MathError("charpoly of non-square matrix");
    int n = A.rows;
    Poly1 c(n + 1);
    c[n] = Scalar(1);
    Mat M = Mat::identity(n);
    for (int k = 1; k <= n; ++k) {
        Mat AM = A * M;
        Scalar tr;
        for (int i = 0; i < n; ++i) tr = tr + AM.at(i, i);
        c[n - k] = tr * Scalar(mpq_class(-1, k));
        M = AM;
        for (int i = 0; i < n; ++i) M.at(i, i) = M.at(i, i) + c[n - k];
    }
    return c;
}

Scalar poly1_eval(const Poly1& p, const Scalar& x) {
    Scalar v;
    for (size_t k = p.size(); k-- > 0;) v = v * x + p[k];
    return v;
}

static std::optional<mpq_class> rat_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);
}

std::optional<Scalar> qi_sqrt(const Scalar& s) {
    if (s.is_real()) {
        if (auto r = rat_sqrt(s.re)) return Scalar(*r);
        if (auto r = rat_sqrt(-s.re)) return Scalar(mpq_class(0), *r);
        return std::nullopt;
    }
    // (u + vi)^2 = x + yi needs u^2 = (x + |s|)/2 with |s|^2 = x^2 + y^2 square
    auto t = rat_sqrt(s.norm());
    if (!t) return std::nullopt;
    auto u = rat_sqrt((s.re + *t) / 2);
    if (!u || sgn(*u) == 0) return std::nullopt;
    mpq_class v = s.im / (2 * *u);
    Scalar root(*u, v);
    if (!((root * root - s).is_zero())) return std::nullopt;
    return root;
}

namespace {

// p / (x - r), assuming r is a root
Poly1 deflate(const Poly1& p, const Scalar& r) {
    int d = (int)p.size() - 1;
    Poly1 q(d);
    Scalar carry = p[d];
    for (int k = d - 1; k >= 0; --k) {
        q[k] = carry;
        carry = p[k] + carry * r;
    }
    if (!carry.is_zero()) throw MathError("deflation by a non-root");
    return q;
}

bool all_real(const Poly1& p) {
    for (const Scalar& c : p)
        if (!c.is_real()) return false;
    return true;
}

std::vector<mpz_class> divisors(const mpz_class& v0) {
    mpz_class v = abs(v0);
    std::vector<mpz_class> small, big;
    for (mpz_class i = 1; i * i <= v; ++i) {
        if (!mpz_divisible_p(v.get_mpz_t(), i.get_mpz_t())) continue;
        small.push_back(i);
        mpz_class j = v / i;
        if (j != i) big.push_back(j);
    }
    small.insert(small.end(), big.rbegin(), big.rend());
    return small;
}

// integer coefficient vector proportional to p, content 1, positive leading
std::vector<mpz_class> primitive_int(const Poly1& p) {
    mpz_class lcm_den = 1;
    for (const Scalar& c : p)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re.get_den().get_mpz_t());
    std::vector<mpz_class> out;
    mpz_class g = 0;
    for (const Scalar& c : p) {
        mpq_class q = c.re * lcm_den;
        out.push_back(q.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g == 0) g = 1;
    if (sgn(out.back()) < 0) g = -g;
    for (auto& c : out) c /= g;
    return out;
}

// roots of a real quadratic over Q(i), or nullopt if it does not split
std::optional<std::vector<Scalar>> quad_roots(const Scalar& a, const Scalar& b, const Scalar& c) {
    Scalar disc = b * b - Scalar(4) * a * c;
    auto s = qi_sqrt(disc);
    if (!s) return std::nullopt;
    Scalar inv2a = (Scalar(2) * a).inv();
    return std::vector<Scalar>{(-b + *s) * inv2a, (-b - *s) * inv2a};
}

/* Splits a primitive integer quartic with no rational roots into two rational
 * quadratic factors, if possible.  Any Q(i)-split real quartic without
 * rational roots factors this way (conjugate root pairs give rational
 * quadratics), so failure here proves non-splitting. */
std::optional<std::pair<std::array<Scalar, 3>, std::array<Scalar, 3>>>
quartic_split(const std::vector<mpz_class>& P) {
    mpq_class P0(P[0]), P1(P[1]), P2(P[2]), P3(P[3]), P4(P[4]);
    if (P[0] == 0) throw MathError("quartic splitter expects a nonzero constant term");
    for (const mpz_class& ad : divisors(P[4])) {
        mpq_class a(ad), ap(mpq_class(P[4]) / ad);
        for (const mpz_class& cd : divisors(P[0])) {
            for (int cs = 0; cs < 2; ++cs) {
                mpq_class c = cs ? mpq_class(-cd) : mpq_class(cd);
                mpq_class cp = P0 / c;
                // unknown linear coefficients b, bp:
                //   ap b + a bp = P3,  cp b + c bp = P1,  b bp = P2 - a cp - ap c
                mpq_class det = ap * c - a * cp;
                mpq_class Q = P2 - a * cp - ap * c;
                std::vector<std::pair<mpq_class, mpq_class>> cands;
                if (det != 0) {
                    mpq_class b = (c * P3 - a * P1) / det;
                    mpq_class bp = (ap * P1 - cp * P3) / det;
                    if (b * bp == Q) cands.push_back({b, bp});
                } else {
                    // rank-one system: particular solution plus kernel (t a, -t ap)
                    mpq_class b0 = 0, bp0 = P3 / a;
                    if (cp * b0 + c * bp0 == P1) {
                        // (b0 + t a)(bp0 - t ap) = Q, a quadratic in t
                        mpq_class A = -a * ap, Bq = a * bp0 - ap * b0, Cq = b0 * bp0 - Q;
                        mpq_class disc = Bq * Bq - 4 * A * Cq;
                        if (auto sd = rat_sqrt(disc)) {
                            for (int sgn2 = 0; sgn2 < 2; ++sgn2) {
                                mpq_class t = (-Bq + (sgn2 ? -*sd : *sd)) / (2 * A);
                                cands.push_back({b0 + t * a, bp0 - t * ap});
                            }
                        }
                    }
                }
                for (auto& [b, bp] : cands) {
                    // verify the full product before accepting
                    if (a * ap == P4 && a * bp + ap * b == P3 && a * cp + b * bp + ap * c == P2 &&
                        b * cp + bp * c == P1 && c * cp == P0)
                        return std::make_pair(std::array<Scalar, 3>{Scalar(c), Scalar(b), Scalar(a)},
                                              std::array<Scalar, 3>{Scalar(cp), Scalar(bp), Scalar(ap)});
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<Scalar>> qi_roots(const Poly1& p0) {
    Poly1 p = p0;
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    if (p.empty()) throw MathError("roots of the zero polynomial");
    std::vector<Scalar> roots;
    size_t low = 0;
    while (low < p.size() - 1 && p[low].is_zero()) { roots.push_back(Scalar()); ++low; }
    p.erase(p.begin(), p.begin() + low);
    int d = (int)p.size() - 1;
    if (d == 0) return roots;
    if (d == 1) {
        roots.push_back(-p[0] * p[1].inv());
        return roots;
    }
    if (!all_real(p)) {
        if (d == 2) {
            auto r = quad_roots(p[2], p[1], p[0]);
            if (!r) return std::nullopt;
            roots.insert(roots.end(), r->begin(), r->end());
            return roots;
        }
        return std::nullopt;  // out of scope; callers fall back to failure reports
    }
    // rational roots with multiplicity, via the integer root bound
    auto ip = primitive_int(p);
    std::vector<mpq_class> cands;
    for (const mpz_class& num : divisors(ip.front()))
        for (const mpz_class& den : divisors(ip.back())) {
            cands.push_back(mpq_class(num, den));
            cands.push_back(mpq_class(-num, den));
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const mpq_class& r : cands) {
        Scalar rs{r};
        while ((int)p.size() - 1 > 0 && poly1_eval(p, rs).is_zero()) {
            roots.push_back(rs);
            p = deflate(p, rs);
        }
    }
    d = (int)p.size() - 1;
    if (d == 0) return roots;
    if (d == 2) {
        auto r = quad_roots(p[2], p[1], p[0]);
        if (!r) return std::nullopt;
        roots.insert(roots.end(), r->begin(), r->end());
        return roots;
    }
    if (d == 3) return std::nullopt;  // a rootless real cubic keeps a real irrational root
    if (d == 4) {
        auto f = quartic_split(primitive_int(p));
        if (!f) return std::nullopt;
        auto r1 = quad_roots(f->first[2], f->first[1], f->first[0]);
        auto r2 = quad_roots(f->second[2], f->second[1], f->second[0]);
        if (!r1 || !r2) return std::nullopt;
        roots.insert(roots.end(), r1->begin(), r1->end());
        roots.insert(roots.end(), r2->begin(), r2->end());
        return roots;
    }
    return std::nullopt;
}

namespace {

// representation of each operator on the invariant subspace spanned by the
// columns of W: solves W R = A W column by column
std::optional<Mat> restrict_to(const Mat& A, const Mat& W) {
    Mat aug = hcat(W, A * W);
    std::vector<int> piv = rref(aug);
    Mat R(W.cols, W.cols);
    for (int j = 0; j < W.cols; ++j) {
        for (size_t i = 0; i < piv.size(); ++i) {
            if (piv[i] >= W.cols) return std::nullopt;  // not invariant
            R.at(piv[i], j) = aug.at((int)i, W.cols + j);
        }
    }
    // ensure no pivot fell into the augmented block
    for (int c : piv)
        if (c >= W.cols) return std::nullopt;
    return R;
}

Mat mat_from_cols(const std::vector<std::vector<Scalar>>& cols) {
    return from_columns(cols, (int)cols[0].size());
}

} // namespace

SpectrumReport simultaneous_triangularize(const std::vector<Mat>& mats) {
    SpectrumReport rep;
    int m = (int)mats.size();
    if (m == 0) throw MathError("empty family");
    int N = mats[0].rows;
    for (const Mat& A : mats)
        if (A.rows != N || A.cols != N) throw MathError("family shapes differ");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!(mats[i] * mats[j] == mats[j] * mats[i])) throw NonCommuting(i + 1, j + 1);

    // eigenvalue candidates for every restriction, read off the full spectra
    std::vector<std::vector<Scalar>> cands(m);
    for (int j = 0; j < m; ++j) {
        auto r = qi_roots(charpoly(mats[j]));
        if (!r) {
            rep.failure = "characteristic polynomial of operator " + std::to_string(j + 1) +
                          " does not split over Q(i)";
            return rep;
        }
        std::sort(r->begin(), r->end());
        r->erase(std::unique(r->begin(), r->end(),
                             [](const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }),
                 r->end());
        cands[j] = *r;
    }

    Mat U = Mat::identity(N);
    for (int t = 0; t < N; ++t) {
        Mat Uinv = *inverse(U);
        // quotient family on the trailing block
        std::vector<int> tail;
        for (int i = t; i < N; ++i) tail.push_back(i);
        std::vector<Mat> Q;
        for (int j = 0; j < m; ++j) Q.push_back((Uinv * mats[j] * U).submatrix(tail, tail));

        // cut the space down to a joint eigenspace
        Mat W = Mat::identity(N - t);
        for (int j = 0; j < m; ++j) {
            auto R = restrict_to(Q[j], W);
            if (!R) throw MathError("invariant subspace bookkeeping failed");
            bool found = false;
            for (const Scalar& lam : cands[j]) {
                Mat Rl = *R;
                for (int i = 0; i < Rl.rows; ++i) Rl.at(i, i) = Rl.at(i, i) - lam;
                auto K = kernel_basis(Rl);
                if (!K.empty()) {
                    W = W * mat_from_cols(K);
                    found = true;
                    break;
                }
            }
            if (!found) throw MathError("no joint eigenvector despite split spectra");
        }

        // new basis vector: the first column of W, completed by unit vectors
        std::vector<Scalar> w(N - t);
        for (int i = 0; i < N - t; ++i) w[i] = W.at(i, 0);
        int pr = -1;
        for (int i = 0; i < N - t; ++i)
            if (!w[i].is_zero()) { pr = i; break; }
        Mat S(N - t, N - t);
        for (int i = 0; i < N - t; ++i) S.at(i, 0) = w[i];
        int col = 1;
        for (int i = 0; i < N - t; ++i) {
            if (i == pr) continue;
            S.at(i, col++) = Scalar(1);
        }
        Mat T = Mat::identity(N);
        for (int i = 0; i < N - t; ++i)
            for (int j2 = 0; j2 < N - t; ++j2) T.at(t + i, t + j2) = S.at(i, j2);
        U = U * T;
    }

    rep.U = U;
    rep.Uinv = *inverse(U);
    rep.B = Mat(m, N);
    for (int j = 0; j < m; ++j) {
        Mat b = rep.Uinv * mats[j] * U;
        if (!b.is_upper_triangular()) throw MathError("triangularization postcondition failed");
        for (int i = 0; i < N; ++i) rep.B.at(j, i) = b.at(i, i);
        rep.upper.push_back(std::move(b));
    }
    for (int i = 0; i < N; ++i) {
        std::vector<Scalar> tup(m);
        for (int j = 0; j < m; ++j) tup[j] = rep.upper[j].at(i, i);
        rep.spectrum[tup]++;
    }
    rep.ok = true;
    return rep;
}

} // namespace quadcoh
