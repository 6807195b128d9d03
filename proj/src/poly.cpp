#include "quadcoh/poly.hpp"
#include "quadcoh/linalg.hpp"

namespace quadcoh {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

static void gen_basis(int n, int r, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (int(cur.size()) == n - 1) {
        cur.push_back(r);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= r; ++e) {
        cur.push_back(e);
        gen_basis(n, r - e, cur, out);
        cur.pop_back();
    }
}

std::vector<MultiIndex> monomial_basis(int n, int r) {
    std::vector<MultiIndex> out;
    out.reserve(size_t(binom(r + n - 1, n - 1)));
    MultiIndex cur;
    gen_basis(n, r, cur, out);
    return out;
}

void HomPoly::add_term(const MultiIndex& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    HomPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const {
    HomPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
    HomPoly r(n, deg + o.deg);
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) {
            MultiIndex m = m1;
            for (int i = 0; i < n; ++i) m[i] += m2[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

HomPoly HomPoly::operator*(const Scalar& c) const {
    HomPoly r(n, deg);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms) r.terms.emplace(m, x * c);
    return r;
}

bool HomPoly::is_real_poly() const {
    for (const auto& [m, c] : terms)
        if (!c.is_real()) return false;
    return true;
}

HomPoly HomPoly::conj() const {
    HomPoly r(n, deg);
    for (const auto& [m, c] : terms) r.terms.emplace(m, c.conj());
    return r;
}

HomPoly monomial(int n, const MultiIndex& m, const Scalar& c) {
    HomPoly p(n, mi_degree(m));
    p.add_term(m, c);
    return p;
}

HomPoly constant_poly(int n, const Scalar& c) {
    return monomial(n, MultiIndex(n, 0), c);
}

HomPoly derivative(const HomPoly& p, int i) {
    HomPoly r(p.n, p.deg > 0 ? p.deg - 1 : 0);
    for (const auto& [m, c] : p.terms) {
        if (m[i] == 0) continue;
        MultiIndex d = m;
        d[i] -= 1;
        r.add_term(d, c * Scalar(m[i]));
    }
    return r;
}

HomPoly apply_linvf(const ScalarMat& Y, const HomPoly& P) {
    HomPoly r(P.n, P.deg);
    for (int m = 0; m < P.n; ++m) {
        HomPoly dP = derivative(P, m);
        if (dP.is_zero()) continue;
        for (int p = 0; p < P.n; ++p) {
            const Scalar& c = Y[m][p];
            if (c.is_zero()) continue;
            MultiIndex xp(P.n, 0);
            xp[p] = 1;
            r = r + monomial(P.n, xp, c) * dP;
        }
    }
    return r;
}

std::optional<HomPoly> divides(const HomPoly& D, const HomPoly& Q) {
    if (D.is_zero()) throw ZeroDivisor();
    int n = D.n;
    if (Q.is_zero()) return HomPoly(n, 0);
    int dT = Q.deg - D.deg;
    if (dT < 0) return std::nullopt;
    std::vector<MultiIndex> tb = monomial_basis(n, dT);
    std::vector<MultiIndex> qb = monomial_basis(n, Q.deg);
    std::map<MultiIndex, int> qrow;
    for (size_t i = 0; i < qb.size(); ++i) qrow[qb[i]] = int(i);
    Mat M(int(qb.size()), int(tb.size()));
    for (size_t j = 0; j < tb.size(); ++j)
        for (const auto& [m, c] : D.terms) {
            MultiIndex s = m;
            for (int i = 0; i < n; ++i) s[i] += tb[j][i];
            M.at(qrow[s], int(j)) += c;
        }
    std::vector<Scalar> q(qb.size());
    for (const auto& [m, c] : Q.terms) q[qrow[m]] = c;
    auto x = solve(M, q);
    if (!x) return std::nullopt;
    HomPoly T(n, dT);
    for (size_t j = 0; j < tb.size(); ++j) T.add_term(tb[j], (*x)[j]);
    // the solver ignores dependent rows, so confirm the product exactly
    if (D * T != Q) return std::nullopt;
    return T;
}

HomPoly substitute_linear(const HomPoly& P, const ScalarMat& U) {
    int n = P.n;
    std::vector<HomPoly> images;  // x_i -> sum_j U[i][j] y_j
    for (int i = 0; i < n; ++i) {
        HomPoly li(n, 1);
        for (int j = 0; j < n; ++j) {
            MultiIndex m(n, 0);
            m[j] = 1;
            li.add_term(m, U[i][j]);
        }
        images.push_back(li);
    }
    HomPoly r(n, P.deg);
    for (const auto& [m, c] : P.terms) {
        HomPoly t = constant_poly(n, c);
        for (int i = 0; i < n; ++i)
            for (int e = 0; e < m[i]; ++e) t = t * images[i];
        r = r + t;
    }
    return r;
}

std::string to_string(const HomPoly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::vector<std::string> v = vars;
    if (v.empty()) {
        if (p.n <= 3) {
            v = {"x", "y", "z"};
            v.resize(p.n);
        } else {
            for (int i = 0; i < p.n; ++i) v.push_back("x" + std::to_string(i + 1));
        }
    }
    std::string out;
    for (const auto& [m, c] : p.terms) {
        if (!out.empty()) out += " + ";
        std::string cs = to_string(c);
        if (!c.is_real()) cs = "(" + cs + ")";
        out += cs;
        for (int i = 0; i < p.n; ++i) {
            if (m[i] == 0) continue;
            out += " " + v[i];
            if (m[i] > 1) out += "^" + std::to_string(m[i]);
        }
    }
    return out;
}

} // namespace quadcoh
