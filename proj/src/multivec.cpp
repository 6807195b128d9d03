#include "quadcoh/multivec.hpp"
#include "quadcoh/linalg.hpp"
#include <algorithm>
#include <functional>

namespace quadcoh {

std::vector<Tuple> increasing_tuples(int n, int p) {
    std::vector<Tuple> out;
    if (p < 0 || p > n) return out;
    Tuple cur;
    // lexicographic ascent over increasing tuples
    std::function<void(int)> rec = [&](int start) {
        if (int(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

bool MultiVec::is_zero() const {
    for (const auto& [k, f] : comps)
        if (!f.is_zero()) return false;
    return true;
}

void MultiVec::add_comp(const Tuple& k, const HomPoly& poly) {
    if (poly.is_zero()) return;
    auto it = comps.find(k);
    if (it == comps.end()) {
        comps.emplace(k, poly);
    } else {
        it->second = it->second + poly;
        if (it->second.is_zero()) comps.erase(it);
    }
}

HomPoly MultiVec::comp(const Tuple& k) const {
    auto it = comps.find(k);
    return it == comps.end() ? HomPoly(n, deg) : it->second;
}

MultiVec MultiVec::operator+(const MultiVec& o) const {
    MultiVec r = *this;
    if (r.comps.empty() && !o.comps.empty()) r.deg = o.deg;
    for (const auto& [k, f] : o.comps) r.add_comp(k, f);
    return r;
}

MultiVec MultiVec::operator-(const MultiVec& o) const { return *this + o * Scalar(-1); }

MultiVec MultiVec::operator*(const Scalar& c) const {
    MultiVec r(n, p, deg);
    if (c.is_zero()) return r;
    for (const auto& [k, f] : comps) r.comps.emplace(k, f * c);
    return r;
}

bool MultiVec::operator==(const MultiVec& o) const {
    return n == o.n && p == o.p && comps == o.comps;
}

MultiVec mv_term(int n, const Tuple& k, const HomPoly& poly) {
    MultiVec r(n, int(k.size()), poly.deg);
    r.add_comp(k, poly);
    return r;
}

MultiVec mv_vf(const HomPoly& f, int direction) {
    return mv_term(f.n, {direction}, f);
}

/* sign of merging two disjoint increasing tuples: (-1)^(inversions) */
static int merge_sign(const Tuple& a, const Tuple& b, Tuple& merged) {
    int inv = 0;
    for (int x : a)
        for (int y : b)
            if (x > y) ++inv;
    merged = a;
    merged.insert(merged.end(), b.begin(), b.end());
    std::sort(merged.begin(), merged.end());
    return (inv % 2 == 0) ? 1 : -1;
}

static bool tuples_disjoint(const Tuple& a, const Tuple& b) {
    for (int x : a)
        for (int y : b)
            if (x == y) return false;
    return true;
}

MultiVec wedge(const MultiVec& A, const MultiVec& B) {
    MultiVec r(A.n, A.p + B.p, A.deg + B.deg);
    if (r.p > A.n) return MultiVec(A.n, A.n, A.deg + B.deg);  // vanishes
    for (const auto& [ka, fa] : A.comps)
        for (const auto& [kb, fb] : B.comps) {
            if (!tuples_disjoint(ka, kb)) continue;
            Tuple m;
            int s = merge_sign(ka, kb, m);
            r.add_comp(m, (fa * fb) * Scalar(s));
        }
    return r;
}

/* [f d_I, g d_J] on decomposable terms; see header for conventions. */
static MultiVec term_sn(const HomPoly& f, const Tuple& I, const HomPoly& g, const Tuple& J) {
    int n = f.n;
    int p = int(I.size()), q = int(J.size());
    int rdeg = f.deg + g.deg - 1;
    MultiVec zero(n, p + q - 1 >= 0 ? p + q - 1 : 0, rdeg >= 0 ? rdeg : 0);
    if (p == 0 && q == 0) return zero;
    if (p == 1 && q == 0) return mv_term(n, {}, f * derivative(g, I[0]));
    if (p == 0 && q == 1) return mv_term(n, {}, -(g * derivative(f, J[0])));
    if (p == 1 && q == 1) {
        MultiVec r = zero;
        r.add_comp({J[0]}, f * derivative(g, I[0]));
        r.add_comp({I[0]}, -(g * derivative(f, J[0])));
        return r;
    }
    if (q >= 2) {
        // B = (g d_{j1}) ^ d_{Jrest}
        Tuple j1{J[0]}, jrest(J.begin() + 1, J.end());
        HomPoly one = constant_poly(n, Scalar(1));
        MultiVec t1 = wedge(term_sn(f, I, g, j1), mv_term(n, jrest, one));
        MultiVec t2 = wedge(mv_term(n, j1, g), term_sn(f, I, one, jrest));
        if ((p - 1) % 2 != 0) t2 = -t2;
        return t1 + t2;
    }
    // p >= 2, q <= 1: graded antisymmetry [A,B] = -(-1)^((p-1)(q-1)) [B,A]
    MultiVec r = term_sn(g, J, f, I);
    int s = ((p - 1) * (q - 1)) % 2 == 0 ? -1 : 1;
    return r * Scalar(s);
}

MultiVec schouten(const MultiVec& A, const MultiVec& B) {
    int pr = A.p + B.p - 1;
    MultiVec r(A.n, pr >= 0 ? pr : 0, A.deg + B.deg - 1 >= 0 ? A.deg + B.deg - 1 : 0);
    for (const auto& [ka, fa] : A.comps)
        for (const auto& [kb, fb] : B.comps) r = r + term_sn(fa, ka, fb, kb);
    return r;
}

/* shuffle sign eps(K) = (-1)^(sum_j (K[j]-j)) of the (K, K^c) permutation */
static int eps_sign(const Tuple& K) {
    int s = 0;
    for (size_t j = 0; j < K.size(); ++j) s += K[j] - int(j);
    return (s % 2 == 0) ? 1 : -1;
}

MultiVec koszul_div(const MultiVec& A) {
    MultiVec r(A.n, A.p > 0 ? A.p - 1 : 0, A.deg > 0 ? A.deg - 1 : 0);
    if (A.p == 0) return r;
    for (const auto& [K, f] : A.comps) {
        int eK = eps_sign(K);
        for (size_t a = 0; a < K.size(); ++a) {
            int k = K[a];
            Tuple rest;
            for (size_t b = 0; b < K.size(); ++b)
                if (b != a) rest.push_back(K[b]);
            int outside = 0;  // #{c not in K : c < k}
            {
                size_t pos = 0;
                for (int c = 0; c < k; ++c) {
                    if (pos < K.size() && K[pos] == c) { ++pos; continue; }
                    ++outside;
                }
            }
            int s = eK * ((outside % 2 == 0) ? 1 : -1) * eps_sign(rest);
            r.add_comp(rest, derivative(f, k) * Scalar(s));
        }
    }
    return r;
}

MultiVec curl(const MultiVec& Lambda) {
    if (Lambda.p != 2) throw MathError("curl expects a bivector");
    return koszul_div(Lambda);
}

MultiVec lp_coboundary(const MultiVec& Lambda, const MultiVec& C) {
    if (!is_poisson(Lambda)) throw NotPoisson();
    return schouten(Lambda, C);
}

bool is_poisson(const MultiVec& Lambda) { return schouten(Lambda, Lambda).is_zero(); }

bool is_k_exact(const MultiVec& Lambda) { return curl(Lambda).is_zero(); }

std::optional<ScalarMat> is_lp_exact(const MultiVec& Lambda) {
    int n = Lambda.n;
    // unknowns: X = sum x[m][p] (x_p d_m); target: [Lambda, X] = Lambda
    std::vector<Tuple> tuples = increasing_tuples(n, 2);
    std::vector<MultiIndex> mons = monomial_basis(n, 2);
    auto flat = [&](int t, int m) { return t * int(mons.size()) + m; };
    Mat M(int(tuples.size() * mons.size()), n * n);
    std::map<Tuple, int> tix;
    for (size_t t = 0; t < tuples.size(); ++t) tix[tuples[t]] = int(t);
    std::map<MultiIndex, int> mix;
    for (size_t m = 0; m < mons.size(); ++m) mix[mons[m]] = int(m);
    for (int mrow = 0; mrow < n; ++mrow)
        for (int pcol = 0; pcol < n; ++pcol) {
            MultiIndex e(n, 0);
            e[pcol] = 1;
            MultiVec bx = schouten(Lambda, mv_vf(monomial(n, e), mrow));
            int col = mrow * n + pcol;
            for (const auto& [k, f] : bx.comps)
                for (const auto& [mo, c] : f.terms) M.at(flat(tix[k], mix[mo]), col) = c;
        }
    std::vector<Scalar> rhs(size_t(tuples.size() * mons.size()));
    for (const auto& [k, f] : Lambda.comps)
        for (const auto& [mo, c] : f.terms) rhs[flat(tix[k], mix[mo])] = c;
    auto x = solve(M, rhs);
    if (!x) return std::nullopt;
    ScalarMat X(n, std::vector<Scalar>(n));
    for (int m = 0; m < n; ++m)
        for (int p = 0; p < n; ++p) X[m][p] = (*x)[m * n + p];
    return X;
}

std::string to_string(const MultiVec& A) {
    if (A.is_zero()) return "0";
    std::string out;
    for (const auto& [k, f] : A.comps) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(f) + ")";
        if (!k.empty()) {
            out += " d";
            for (int i : k) out += std::to_string(i + 1);
        }
    }
    return out;
}

} // namespace quadcoh
