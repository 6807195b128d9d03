#include "quadcoh/pcohomology.hpp"

#include <algorithm>

namespace quadcoh {

bool PCochain::is_zero() const {
    for (const auto& [k, f] : comps)
        if (!f.is_zero()) return false;
    return true;
}

void PCochain::add_comp(const Tuple& k, const HomPoly& poly) {
    if (poly.is_zero()) return;
    auto it = comps.find(k);
    if (it == comps.end()) {
        comps.emplace(k, poly);
    } else {
        it->second = it->second + poly;
        if (it->second.is_zero()) comps.erase(it);
    }
}

HomPoly PCochain::comp(const Tuple& k) const {
    auto it = comps.find(k);
    return it == comps.end() ? HomPoly(n, r) : it->second;
}

PCochain PCochain::operator+(const PCochain& o) const {
    PCochain out = *this;
    for (const auto& [k, f] : o.comps) out.add_comp(k, f);
    return out;
}

PCochain PCochain::operator-(const PCochain& o) const { return *this + o * Scalar(-1); }

PCochain PCochain::operator*(const Scalar& c) const {
    PCochain out(n, p, r);
    if (c.is_zero()) return out;
    for (const auto& [k, f] : comps) out.comps.emplace(k, f * c);
    return out;
}

bool PCochain::operator==(const PCochain& o) const {
    return n == o.n && p == o.p && r == o.r && comps == o.comps;
}

std::vector<Scalar> pc_coords(const PCochain& c) {
    auto tuples = increasing_tuples(c.n, c.p);
    auto mons = monomial_basis(c.n, c.r);
    std::vector<Scalar> out;
    out.reserve(tuples.size() * mons.size());
    for (const Tuple& t : tuples) {
        HomPoly f = c.comp(t);
        for (const MultiIndex& m : mons) {
            auto it = f.terms.find(m);
            out.push_back(it == f.terms.end() ? Scalar() : it->second);
        }
    }
    return out;
}

PCochain pc_from_coords(int n, int p, int r, const std::vector<Scalar>& v) {
    PCochain c(n, p, r);
    auto tuples = increasing_tuples(n, p);
    auto mons = monomial_basis(n, r);
    size_t idx = 0;
    for (const Tuple& t : tuples) {
        HomPoly f(n, r);
        for (const MultiIndex& m : mons) f.add_term(m, v[idx++]);
        c.add_comp(t, f);
    }
    return c;
}

MultiVec mv_from_coords(int n, int p, int d, const std::vector<Scalar>& v) {
    MultiVec out(n, p, d);
    auto tuples = increasing_tuples(n, p);
    auto mons = monomial_basis(n, d);
    size_t idx = 0;
    for (const Tuple& t : tuples) {
        HomPoly f(n, d);
        for (const MultiIndex& m : mons) f.add_term(m, v[idx++]);
        out.add_comp(t, f);
    }
    return out;
}

long r_space_dim(int n, int p, int d) {
    if (d < 0 || p < 0 || p > n) return 0;
    return binom(n, p) * binom(d + n - 1, n - 1);
}

long p_space_dim(int n, int p, int r) {
    if (r < 0 || p < 0 || p > n) return 0;
    return binom(n, p) * binom(r + n - 1, n - 1);
}

static int tuple_sum(const Tuple& t) {
    int s = 0;
    for (int v : t) s += v;
    return s;
}

PCochain inject(const SrmiStructure& S, const MultiVec& C) {
    const LinFrame& f = S.frame;
    int n = f.n, p = C.p;
    PCochain out(n, p, C.deg + n - p);
    for (const Tuple& k : increasing_tuples(n, p)) {
        HomPoly P(n, out.r);
        for (const auto& [i, s] : C.comps) {
            if (s.is_zero()) continue;
            HomPoly M = minor_del(f.ell, k, i);
            if (M.is_zero()) continue;
            HomPoly term = M * s;
            P = ((tuple_sum(i) + tuple_sum(k)) % 2 == 0) ? P + term : P - term;
        }
        out.add_comp(k, P);
    }
    return out;
}

std::optional<MultiVec> real_witness(const SrmiStructure& S, const PCochain& c) {
    const LinFrame& f = S.frame;
    int n = f.n, p = c.p;
    int d = c.r - n + p;
    MultiVec w(n, p, std::max(d, 0));
    for (const Tuple& i : increasing_tuples(n, p)) {
        HomPoly T(n, c.r + p);
        for (const auto& [k, P] : c.comps)
            T = T + minor_keep(f.ell, k, i) * P;
        if (T.is_zero()) continue;
        if (d < 0) return std::nullopt;
        auto q = divides(f.D, T);
        if (!q) return std::nullopt;
        w.add_comp(i, *q);
    }
    return w;
}

bool is_real(const SrmiStructure& S, const PCochain& c) {
    return real_witness(S, c).has_value();
}

PCochain p_coboundary(const SrmiStructure& S, const PCochain& c) {
    int n = c.n;
    PCochain out(n, c.p + 1, c.r);
    if (c.p >= n) return out;
    for (const auto& [k, P] : c.comps) {
        if (P.is_zero()) continue;
        for (int i = 0; i < n; ++i) {
            if (std::binary_search(k.begin(), k.end(), i)) continue;
            HomPoly Q = apply_linvf(S.X[i], P) - P * S.delta[i];
            if (Q.is_zero()) continue;
            int before = int(std::lower_bound(k.begin(), k.end(), i) - k.begin());
            Tuple u = k;
            u.insert(u.begin() + before, i);
            out.add_comp(u, (before % 2 == 0) ? Q : -Q);
        }
    }
    return out;
}

OperatorTuple srmi_operator_tuple(const SrmiStructure& S, int r) {
    int n = S.frame.n;
    std::vector<Mat> mats;
    mats.reserve(n);
    for (int i = 0; i < n; ++i) mats.push_back(linvf_matrix(S.X[i], n, r));
    return make_operator_tuple(std::move(mats), S.delta);
}

KoszulCohomology p_cohomology(const SrmiStructure& S, int r) {
    return koszul_cohomology(srmi_operator_tuple(S, r));
}

/* Columns of the embedding on the monomial basis of the canonical-frame
 * slice, with the minors computed once per tuple pair. */
static Mat inject_matrix(const SrmiStructure& S, int p, int r) {
    const LinFrame& f = S.frame;
    int n = f.n;
    int d = r - n + p;
    long nP = p_space_dim(n, p, r);
    if (d < 0) return Mat(int(nP), 0);
    auto ktuples = increasing_tuples(n, p);
    auto itunples = ktuples;  // same index set for rows and sources
    auto mons_r = monomial_basis(n, r);
    auto mons_d = monomial_basis(n, d);
    // minors[ki][ii] = (-1)^{|i|+|k|} minor_del(ell, k, i)
    std::vector<std::vector<HomPoly>> minors(ktuples.size(),
                                             std::vector<HomPoly>(itunples.size()));
    for (size_t ki = 0; ki < ktuples.size(); ++ki)
        for (size_t ii = 0; ii < itunples.size(); ++ii) {
            HomPoly M = minor_del(f.ell, ktuples[ki], itunples[ii]);
            if ((tuple_sum(ktuples[ki]) + tuple_sum(itunples[ii])) % 2 != 0) M = -M;
            minors[ki][ii] = M;
        }
    Mat out(int(nP), int(itunples.size() * mons_d.size()));
    long Er = long(mons_r.size());
    for (size_t ii = 0; ii < itunples.size(); ++ii)
        for (size_t mi = 0; mi < mons_d.size(); ++mi) {
            int col = int(ii * mons_d.size() + mi);
            for (size_t ki = 0; ki < ktuples.size(); ++ki) {
                const HomPoly& M = minors[ki][ii];
                for (const auto& [e, coeff] : M.terms) {
                    MultiIndex prod = e;
                    for (int v = 0; v < n; ++v) prod[v] += mons_d[mi][v];
                    auto it = std::lower_bound(mons_r.begin(), mons_r.end(), prod);
                    out.at(int(long(ki) * Er + (it - mons_r.begin())), col) =
                        out.at(int(long(ki) * Er + (it - mons_r.begin())), col) + coeff;
                }
            }
        }
    return out;
}

Complement choose_complement(const SrmiStructure& S, int p, int r, bool reversed) {
    int n = S.frame.n;
    Complement c;
    c.p = p;
    c.r = r;
    c.nP = p_space_dim(n, p, r);
    c.inj = inject_matrix(S, p, r);
    c.nR = c.inj.cols;
    // pivot coordinates of the column span, via the echelon form of the
    // transpose (optionally with the coordinate order reversed)
    Mat T(int(c.nR), int(c.nP));
    for (int i = 0; i < c.nR; ++i)
        for (int j = 0; j < c.nP; ++j)
            T.at(i, j) = c.inj.at(reversed ? int(c.nP) - 1 - j : j, i);
    std::vector<int> piv = rref(T);
    if (long(piv.size()) != c.nR) throw MathError("embedded slice basis is linearly dependent");
    std::vector<bool> is_piv(c.nP, false);
    for (int pc : piv) is_piv[reversed ? int(c.nP) - 1 - pc : pc] = true;
    for (int j = 0; j < c.nP; ++j)
        (is_piv[j] ? c.pivot_rows : c.s_rows).push_back(j);
    c.nS = long(c.s_rows.size());
    std::vector<int> all_cols(c.nR);
    for (int j = 0; j < c.nR; ++j) all_cols[j] = j;
    Mat B = c.inj.submatrix(c.pivot_rows, all_cols);
    auto Binv = inverse(B);
    if (!Binv) throw MathError("pivot corner of the embedding is singular");
    c.Binv = *Binv;
    c.C = c.inj.submatrix(c.s_rows, all_cols);
    return c;
}

std::pair<std::vector<Scalar>, std::vector<Scalar>>
split_coords(const Complement& c, const std::vector<Scalar>& x) {
    if (long(x.size()) != c.nP) throw MathError("split dimension mismatch");
    std::vector<Scalar> xpi(c.pivot_rows.size());
    for (size_t i = 0; i < c.pivot_rows.size(); ++i) xpi[i] = x[c.pivot_rows[i]];
    std::vector<Scalar> yR = c.Binv.apply(xpi);
    std::vector<Scalar> cy = c.C.apply(yR);
    std::vector<Scalar> yS(c.s_rows.size());
    for (size_t i = 0; i < c.s_rows.size(); ++i) yS[i] = x[c.s_rows[i]] - cy[i];
    return {std::move(yR), std::move(yS)};
}

namespace {

struct LevelData {
    Complement comp;
    Mat dR, dP, dS;                  // differentials leaving this wedge degree
    std::vector<std::vector<Scalar>> repsR, repsP, repsS;
    long hR = 0, hP = 0, hS = 0;
    long rank_i = 0, rank_ps = 0, rank_phi = 0;
    // chain images of the connecting map applied to every complement rep
    std::vector<std::vector<Scalar>> phi_img;
    // complement parts of the full-complex reps (images under the projection)
    std::vector<std::vector<Scalar>> ps_img;
    bool node_ok = true;
    bool asm_ok = true;
};

struct RSlice {
    int n = 0, r = 0;
    std::vector<LevelData> lv;
    bool alt_ok = true;
};

std::vector<Scalar> embed_s(const Complement& c, const std::vector<Scalar>& s) {
    std::vector<Scalar> x(c.nP);
    for (size_t j = 0; j < c.s_rows.size(); ++j) x[c.s_rows[j]] = s[j];
    return x;
}

Mat matrix_of_coboundary(const MultiVec& L, int p, int d) {
    int n = L.n;
    long rows = r_space_dim(n, p + 1, d + 1);
    long cols = r_space_dim(n, p, d);
    Mat M{int(rows), int(cols)};
    if (rows == 0 || cols == 0) return M;
    int j = 0;
    for (const Tuple& t : increasing_tuples(n, p))
        for (const MultiIndex& m : monomial_basis(n, d)) {
            MultiVec img = schouten(L, mv_term(n, t, monomial(n, m)));
            std::vector<Scalar> v = mv_coords(img, p + 1, d + 1);
            for (long i = 0; i < rows; ++i) M.at(int(i), j) = v[i];
            ++j;
        }
    return M;
}

void add_columns(IncrementalSpan& span, const Mat& M) {
    for (int j = 0; j < M.cols; ++j) {
        std::vector<Scalar> col(M.rows);
        for (int i = 0; i < M.rows; ++i) col[i] = M.at(i, j);
        span.add(std::move(col));
    }
}

RSlice build_r_slice(const SrmiStructure& S, int r, bool reversed) {
    const MultiVec& L = S.Lambda;
    if (!is_poisson(L)) throw NotPoisson();
    int n = S.frame.n;
    RSlice out;
    out.n = n;
    out.r = r;
    out.lv.resize(n + 1);
    auto& lv = out.lv;

    OperatorTuple ops = srmi_operator_tuple(S, r);
    for (int p = 0; p <= n; ++p) lv[p].comp = choose_complement(S, p, r, reversed);

    for (int p = 0; p <= n; ++p) {
        int d = r - n + p;
        lv[p].dR = matrix_of_coboundary(L, p, d);
        lv[p].dP = koszul_cochain_matrix(ops, p);
        if (p < n) {
            // the embedding must intertwine the two coboundaries
            Mat lhs = lv[p].dP * lv[p].comp.inj;
            Mat rhs = lv[p + 1].comp.inj * lv[p].dR;
            if (!(lhs == rhs))
                throw MathError("embedded subcomplex is not preserved by the coboundary");
        }
        long srows = (p < n) ? lv[p + 1].comp.nS : 0;
        Mat dS(int(srows), int(lv[p].comp.nS));
        for (long j = 0; j < lv[p].comp.nS; ++j) {
            // coboundary of a complement unit vector = a column of dP
            std::vector<Scalar> v(lv[p].dP.rows);
            int col = lv[p].comp.s_rows[j];
            for (int i = 0; i < lv[p].dP.rows; ++i) v[i] = lv[p].dP.at(i, col);
            if (p < n) {
                auto [rp, sp] = split_coords(lv[p + 1].comp, v);
                for (long i = 0; i < srows; ++i) dS.at(int(i), int(j)) = sp[i];
            }
        }
        lv[p].dS = dS;
    }

    // boundary spans entering each wedge degree, kept unmutated for the
    // membership side of the exactness checks
    std::vector<IncrementalSpan> bR, bP, bS;
    for (int p = 0; p <= n; ++p) {
        IncrementalSpan sR(int(lv[p].comp.nR)), sP(int(lv[p].comp.nP)), sS(int(lv[p].comp.nS));
        if (p > 0) {
            add_columns(sR, lv[p - 1].dR);
            add_columns(sP, lv[p - 1].dP);
            add_columns(sS, lv[p - 1].dS);
        }
        bR.push_back(std::move(sR));
        bP.push_back(std::move(sP));
        bS.push_back(std::move(sS));
    }

    for (int p = 0; p <= n; ++p) {
        IncrementalSpan g = bR[p];
        for (auto& z : kernel_basis(lv[p].dR))
            if (g.add(z)) lv[p].repsR.push_back(z);
        lv[p].hR = long(lv[p].repsR.size());
        g = bP[p];
        for (auto& z : kernel_basis(lv[p].dP))
            if (g.add(z)) lv[p].repsP.push_back(z);
        lv[p].hP = long(lv[p].repsP.size());
        g = bS[p];
        for (auto& z : kernel_basis(lv[p].dS))
            if (g.add(z)) lv[p].repsS.push_back(z);
        lv[p].hS = long(lv[p].repsS.size());
    }

    // induced maps of the exact sequence, with their cohomology ranks
    for (int p = 0; p <= n; ++p) {
        IncrementalSpan gi = bP[p];
        for (const auto& z : lv[p].repsR) {
            std::vector<Scalar> v = lv[p].comp.inj.apply(z);
            auto [rp, sp] = split_coords(lv[p].comp, v);
            for (const Scalar& c : sp)
                if (!c.is_zero()) throw MathError("embedded vector acquired a complement part");
            if (gi.add(v)) ++lv[p].rank_i;
        }
        IncrementalSpan gs = bS[p];
        for (const auto& z : lv[p].repsP) {
            auto [rp, sp] = split_coords(lv[p].comp, z);
            lv[p].ps_img.push_back(sp);
            if (gs.add(sp)) ++lv[p].rank_ps;
        }
        if (p < n) {
            IncrementalSpan gp = bR[p + 1];
            for (const auto& z : lv[p].repsS) {
                std::vector<Scalar> v = lv[p].dP.apply(embed_s(lv[p].comp, z));
                auto [rp, sp] = split_coords(lv[p + 1].comp, v);
                for (const Scalar& c : sp)
                    if (!c.is_zero())
                        throw MathError("connecting image left the embedded subcomplex");
                lv[p].phi_img.push_back(rp);
                if (gp.add(rp)) ++lv[p].rank_phi;
            }
        }
    }

    // exactness at every node: rank bookkeeping plus image-inside-kernel
    for (int p = 0; p <= n; ++p) {
        long phi_prev = (p > 0) ? lv[p - 1].rank_phi : 0;
        bool ok = (lv[p].hR == phi_prev + lv[p].rank_i)
               && (lv[p].hP == lv[p].rank_i + lv[p].rank_ps)
               && (lv[p].hS == lv[p].rank_ps + ((p < n) ? lv[p].rank_phi : 0));
        if (p > 0)
            for (const auto& rp : lv[p - 1].phi_img)
                if (!bP[p].contains(lv[p].comp.inj.apply(rp))) ok = false;
        if (p < n)
            for (const auto& sp : lv[p].ps_img) {
                std::vector<Scalar> v = lv[p].dP.apply(embed_s(lv[p].comp, sp));
                auto [rp2, sp2] = split_coords(lv[p + 1].comp, v);
                for (const Scalar& c : sp2)
                    if (!c.is_zero()) ok = false;
                if (!bR[p + 1].contains(rp2)) ok = false;
            }
        lv[p].node_ok = ok;
    }

    long alt = 0;
    for (int p = 0; p <= n; ++p) {
        long term = lv[p].hR - lv[p].hP + lv[p].hS;
        alt += (p % 2 == 0) ? term : -term;
    }
    out.alt_ok = (alt == 0);

    for (int p = 0; p <= n; ++p) {
        long pred = ((p > 0) ? lv[p - 1].hS - lv[p - 1].rank_ps : 0)
                  + (lv[p].hP - lv[p].rank_ps);
        lv[p].asm_ok = (pred == lv[p].hR);
    }
    return out;
}

} // namespace

std::vector<SliceReport> srmi_slices(const SrmiStructure& S, int r, bool reversed_complement) {
    RSlice rs = build_r_slice(S, r, reversed_complement);
    int n = rs.n;
    std::vector<SliceReport> out;
    for (int p = 0; p <= n; ++p) {
        SliceReport rep;
        rep.p = p;
        rep.r = r;
        rep.d = r - n + p;
        rep.dim_R = rs.lv[p].hR;
        rep.dim_P = rs.lv[p].hP;
        rep.dim_S = rs.lv[p].hS;
        for (const auto& z : rs.lv[p].repsR)
            rep.reps_R.push_back(mv_from_coords(n, p, rep.d, z));
        rep.les_ok = rs.lv[p].node_ok && rs.alt_ok;
        rep.assemble_ok = rs.lv[p].asm_ok;
        out.push_back(std::move(rep));
    }
    return out;
}

long s_cohomology(const SrmiStructure& S, int p, int r, bool reversed_complement) {
    RSlice rs = build_r_slice(S, r, reversed_complement);
    return rs.lv[p].hS;
}

ConnectingData connecting_map(const SrmiStructure& S, int p, int r, bool reversed_complement) {
    RSlice rs = build_r_slice(S, r, reversed_complement);
    int n = rs.n;
    const LevelData& L = rs.lv[p];
    ConnectingData out;
    long rows = (p < n) ? rs.lv[p + 1].comp.nR : 0;
    out.phi = Mat(int(rows), int(L.comp.nS));
    for (long j = 0; j < L.comp.nS; ++j) {
        std::vector<Scalar> v(L.dP.rows);
        int col = L.comp.s_rows[j];
        for (int i = 0; i < L.dP.rows; ++i) v[i] = L.dP.at(i, col);
        if (p < n) {
            auto [rp, sp] = split_coords(rs.lv[p + 1].comp, v);
            for (long i = 0; i < rows; ++i) out.phi.at(int(i), int(j)) = rp[i];
        }
    }
    out.rank_sharp = L.rank_phi;
    return out;
}

DirectSlice r_cohomology_direct(const MultiVec& Lambda, int p, int d) {
    if (!is_poisson(Lambda)) throw NotPoisson();
    int n = Lambda.n;
    DirectSlice out;
    out.p = p;
    out.d = d;
    Mat dOut = matrix_of_coboundary(Lambda, p, d);
    IncrementalSpan span(int(r_space_dim(n, p, d)));
    if (p > 0 && d > 0) add_columns(span, matrix_of_coboundary(Lambda, p - 1, d - 1));
    for (auto& z : kernel_basis(dOut))
        if (span.add(z)) {
            out.reps.push_back(mv_from_coords(n, p, d, z));
            ++out.dim;
        }
    return out;
}

long assemble(const SrmiStructure& S, int p, int r) {
    RSlice rs = build_r_slice(S, r, false);
    const LevelData& L = rs.lv[p];
    long pred = ((p > 0) ? rs.lv[p - 1].hS - rs.lv[p - 1].rank_ps : 0)
              + (L.hP - L.rank_ps);
    if (pred != L.hR)
        throw ExactnessViolation("reassembled dimension " + std::to_string(pred)
                                 + " at wedge degree " + std::to_string(p)
                                 + ", numerator degree " + std::to_string(r)
                                 + " differs from the direct value " + std::to_string(L.hR));
    return pred;
}

ClassStatus class_status(const MultiVec& Lambda, const MultiVec& candidate) {
    if (!is_poisson(Lambda)) throw NotPoisson();
    ClassStatus st;
    if (candidate.is_zero()) return {true, true};
    st.cocycle = schouten(Lambda, candidate).is_zero();
    int p = candidate.p, d = candidate.deg;
    if (p > 0 && d > 0) {
        Mat dIn = matrix_of_coboundary(Lambda, p - 1, d - 1);
        st.bounding = in_column_span(dIn, mv_coords(candidate, p, d));
    } else {
        st.bounding = false;
    }
    return st;
}

std::vector<HomPoly> casimirs(const MultiVec& Lambda, int d) {
    if (!is_poisson(Lambda)) throw NotPoisson();
    int n = Lambda.n;
    std::vector<HomPoly> out;
    if (d < 0) return out;
    Mat M = matrix_of_coboundary(Lambda, 0, d);
    auto mons = monomial_basis(n, d);
    for (const auto& z : kernel_basis(M)) {
        HomPoly f(n, d);
        for (size_t i = 0; i < mons.size(); ++i) f.add_term(mons[i], z[i]);
        out.push_back(f);
    }
    return out;
}

std::vector<PreferredClass> preferred_classes(const MultiVec& Lambda,
                                              const std::vector<ScalarMat>& stab,
                                              int p, int d) {
    int n = Lambda.n;
    std::vector<PreferredClass> out;
    if (d - p < 0) return out;
    std::vector<HomPoly> cas = casimirs(Lambda, d - p);
    for (const HomPoly& f : cas)
        for (const Tuple& subset : increasing_tuples(int(stab.size()), p)) {
            MultiVec W = mv_term(n, Tuple{}, f);
            for (int idx : subset) W = wedge(W, j1(stab[idx]));
            PreferredClass pc;
            pc.rep = W;
            ClassStatus st = class_status(Lambda, W);
            pc.cocycle = st.cocycle;
            pc.bounding = st.bounding;
            out.push_back(std::move(pc));
        }
    return out;
}

} // namespace quadcoh
