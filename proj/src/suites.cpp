#include "quadcoh/suites.hpp"

#include "quadcoh/catalog.hpp"
#include "quadcoh/errors.hpp"
#include "quadcoh/pcohomology.hpp"
#include "quadcoh/spectral.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace quadcoh {

void SuiteResult::add(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok, detail});
    pass = pass && ok;
}

namespace {

std::string fmt(const char* f, long a, long b = 0, long c = 0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

mpq_class rand_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

MultiVec random_mv(std::mt19937& rng, int n, int p, int d) {
    std::uniform_int_distribution<int> coin(-2, 2);
    MultiVec out(n, p, d);
    for (const Tuple& t : increasing_tuples(n, p)) {
        HomPoly f(n, d);
        for (const MultiIndex& m : monomial_basis(n, d)) f.add_term(m, Scalar(coin(rng)));
        out.add_comp(t, f);
    }
    return out;
}

// ---------------------------------------------------------------- spectrum

SuiteResult spectrum_suite() {
    SuiteResult R{"spectrum", {}, true};
    int n = 3;

    DhcEntry e2 = dhc_catalog(2, {{"a", mpq_class(1)}, {"b", mpq_class(0)}});
    const SrmiStructure& S2 = *e2.certificate;

    // worked example: the rotation-invariant tensor has a one-line kernel
    // (x^2+y^2)^t z^t at degree 3t and is acyclic off multiples of three
    for (int t = 1; t <= 2; ++t) {
        int r = 3 * t;
        SpectrumReport rep = frame_spectrum(S2);
        R.add(fmt("triangularization succeeds (t=%ld)", t), rep.ok, rep.failure);

        auto ke = kernel_exponents(S2, r);
        bool k_ok = ke.size() == 1 && ke[0] == MultiIndex{t - 1, t - 1, t - 1};
        R.add(fmt("zero-diagonal index set is {(t-1)^3} (t=%ld)", t), k_ok);

        KernelTower tower = kernel_tower(induced_triangular_ops(S2, r));
        R.add(fmt("multiplicity 1 at degree %ld", r), tower.mu == 1);
        R.add(fmt("single-stage tower at degree %ld", r),
              tower.s == 1 && tower.kernel_dims == std::vector<int>{1});

        HomPoly disc(n, 2);
        disc.add_term({2, 0, 0}, Scalar(1));
        disc.add_term({0, 2, 0}, Scalar(1));
        HomPoly f = constant_poly(n, Scalar(1));
        for (int i = 0; i < t; ++i) f = f * disc;
        for (int i = 0; i < t; ++i) f = f * monomial(n, {0, 0, 1});
        bool eig = true;
        for (int j = 0; j < n; ++j)
            eig = eig && (apply_linvf(S2.X[j], f) - f * S2.delta[j]).is_zero();
        R.add(fmt("(x^2+y^2)^t z^t joint eigenvector (t=%ld)", t), eig);
    }
    for (int r = 1; r <= 8; ++r) {
        auto H = p_cohomology(S2, r);
        long tot = 0;
        for (long v : H.dims) tot += v;
        long mu = long(kernel_exponents(S2, r).size());
        R.add(fmt("acyclic iff degree not divisible by 3 (r=%ld)", r),
              (tot == 0) == (r % 3 != 0) && (mu == 0) == (tot == 0),
              fmt("total %ld, mu %ld", tot, mu));
    }

    // worked example: three one-dimensional tower stages
    {
        DhcEntry e3z = dhc_catalog(3, {{"a", mpq_class(0)}});
        const SrmiStructure& S = *e3z.certificate;
        KernelTower tower = kernel_tower(induced_triangular_ops(S, 3));
        R.add("three-stage example: multiplicity 3", tower.mu == 3);
        R.add("three-stage example: s = 3 with unit stages",
              tower.s == 3 && tower.kernel_dims == std::vector<int>({1, 1, 1}));
        bool pat_ok = tower.pivots.size() == 3;
        if (pat_ok) {
            auto mons = monomial_basis(n, 3);
            std::vector<MultiIndex> want = {{0, 1, 2}, {1, 1, 1}, {0, 1, 2}};
            for (int a = 0; a < 3; ++a) {
                MultiIndex m = mons[tower.pivots[a]];
                std::sort(m.begin(), m.end());
                pat_ok = pat_ok && m == want[a];
            }
        }
        R.add("three-stage example: kernel monomial shapes", pat_ok);
    }

    // closed-form joint spectrum against the diagonal read
    {
        DhcEntry e3 = dhc_catalog(3, {{"a", mpq_class(1)}});
        DhcEntry e9 = dhc_catalog(9, {{"a", mpq_class(1)}});
        const SrmiStructure* fams[3] = {&S2, &*e3.certificate, &*e9.certificate};
        const char* names[3] = {"rotation", "shear", "nilpotent"};
        for (int w = 0; w < 3; ++w) {
            bool eq = true, mu_ok = true;
            for (int r = 0; r <= 6; ++r) {
                auto js = joint_spectrum(*fams[w], r);
                eq = eq && js.ok && js.spectrum == spectrum_formula(*fams[w], r);
                KernelTower tower = kernel_tower(induced_triangular_ops(*fams[w], r));
                long sum = 0;
                for (int ddim : tower.kernel_dims) sum += ddim;
                mu_ok = mu_ok && tower.mu == sum
                        && tower.mu == long(kernel_exponents(*fams[w], r).size());
            }
            R.add(std::string("joint spectrum formula (") + names[w] + " frame)", eq);
            R.add(std::string("multiplicity = stage dimension sum (") + names[w] + ")", mu_ok);
        }
    }

    // even dimension, invertible coupling: only the determinant line survives
    {
        int m = 4;
        std::vector<ScalarMat> mats(m, ScalarMat(m, std::vector<Scalar>(m)));
        for (int i = 0; i < m; ++i) mats[i][i][i] = Scalar(1);
        ScalarMat alpha(m, std::vector<Scalar>(m));
        auto set = [&](int i, int j, long v) {
            alpha[i][j] = Scalar(v);
            alpha[j][i] = Scalar(-v);
        };
        set(0, 1, 1);
        set(2, 3, 1);
        SrmiStructure S4 = make_srmi(alpha, build_frame(mats));
        bool delta_ok = S4.delta
                        == std::vector<Scalar>({Scalar(1), Scalar(-1), Scalar(1), Scalar(-1)});
        R.add("diagonal 4d frame: divergence pattern", delta_ok);
        bool vanish = true, det_line = true;
        for (int r = 0; r <= 6; ++r) {
            auto H = p_cohomology(S4, r);
            long tot = 0;
            for (long v : H.dims) tot += v;
            long mu = long(kernel_exponents(S4, r).size());
            if (r != 4) vanish = vanish && tot == 0 && mu == 0;
            if (r == 4) {
                det_line = H.dims[0] == 1 && mu == 1;
                HomPoly D = monomial(m, {1, 1, 1, 1});
                for (int k = 0; k < m; ++k)
                    det_line = det_line && (apply_linvf(S4.X[k], D) - D * S4.delta[k]).is_zero();
            }
        }
        R.add("diagonal 4d frame: acyclic off the determinant degree", vanish);
        R.add("diagonal 4d frame: determinant spans degree-4 kernel", det_line);
    }

    return R;
}

// ------------------------------------------------------------------ minors

SuiteResult minors_suite(unsigned seed) {
    SuiteResult R{"minors", {}, true};
    std::mt19937 rng(seed);
    for (int n = 2; n <= 4; ++n) {
        bool ok = true;
        for (int it = 0; it < 20 && ok; ++it) {
            std::vector<std::vector<HomPoly>> ell(n, std::vector<HomPoly>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    ell[i][j] = constant_poly(n, Scalar(rand_rat(rng)));
            HomPoly D = poly_det(ell);
            for (int m = 0; m <= n && ok; ++m) ok = verify_minor_identities(ell, D, m);
        }
        R.add(fmt("random matrices, size %ld, all orders", n), ok);
    }
    // the catalog frames themselves (including det L = D^{n-1} at order zero)
    struct Probe {
        int index;
        ParamMap params;
    };
    std::vector<Probe> probes = {{1, {}}, {2, {}}, {3, {}}, {9, {}},
                                 {11, {{"b", mpq_class(1)}, {"c", mpq_class(1)}}},
                                 {13, {}}};
    for (const auto& pr : probes) {
        DhcEntry e = dhc_catalog(pr.index, pr.params);
        bool ok = true;
        for (int m = 0; m <= 3; ++m) ok = ok && verify_minor_lemma(e.major.frame, m);
        R.add(fmt("catalog frame of entry %ld", pr.index), ok);
    }
    {
        // the z-scaled frame used for the cubic potential twists
        std::vector<ScalarMat> mats(3, ScalarMat(3, std::vector<Scalar>(3)));
        mats[0][0][2] = Scalar(1);  // z d1
        mats[1][1][2] = Scalar(1);  // z d2
        for (int i = 0; i < 3; ++i) mats[2][i][i] = Scalar(1);
        LinFrame fz = build_frame(mats);
        bool ok = true;
        for (int m = 0; m <= 3; ++m) ok = ok && verify_minor_lemma(fz, m);
        R.add("z-scaled frame", ok);
    }
    return R;
}

// ---------------------------------------------------------------- homotopy

SuiteResult homotopy_suite(unsigned seed) {
    SuiteResult R{"homotopy", {}, true};
    std::mt19937 rng(seed);

    // wedge/contraction anticommutator on the Grassmann algebra
    for (int n = 1; n <= 5; ++n) {
        GrassmannBasis G(n);
        bool ok = true;
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                for (int p = 0; p <= n; ++p) {
                    Mat lhs = G.e_op(k, p - 1) * G.i_op(l, p) + G.i_op(l, p + 1) * G.e_op(k, p);
                    Mat rhs(G.dim(p), G.dim(p));
                    if (k == l) rhs = Mat::identity(G.dim(p));
                    ok = ok && (lhs == rhs);
                }
        R.add(fmt("wedge/contraction anticommutator, n=%ld", n), ok);
    }

    // chain/cochain homotopy identity with commutator correction, random pairs
    {
        std::uniform_int_distribution<int> pickN(2, 8), pickk(2, 3), entry(-3, 3);
        bool ok = true;
        for (int it = 0; it < 10 && ok; ++it) {
            int N = pickN(rng), k = pickk(rng);
            auto rand_ops = [&] {
                OperatorTuple T;
                T.count = k;
                T.N = N;
                for (int a = 0; a < k; ++a) {
                    Mat M(N, N);
                    for (int i = 0; i < N; ++i)
                        for (int j = 0; j < N; ++j) M.at(i, j) = Scalar(entry(rng));
                    T.mats.push_back(std::move(M));
                }
                return T;
            };
            ok = ok && homotopy_check(rand_ops(), rand_ops());
        }
        R.add("homotopy identity on random operator families", ok);
    }

    // the coboundary squares to zero on every catalog structure
    for (int idx = 1; idx <= 13; ++idx) {
        DhcEntry e = dhc_catalog(idx);
        bool ok = is_poisson(e.Lambda);
        for (int p = 0; p <= 2 && ok; ++p)
            for (int d = 0; d <= 3 && ok; ++d) {
                MultiVec C = random_mv(rng, 3, p, d);
                ok = schouten(e.Lambda, schouten(e.Lambda, C)).is_zero();
            }
        R.add(fmt("coboundary squares to zero, entry %ld", idx), ok);
    }
    return R;
}

// ----------------------------------------------------------- classification

struct EntryPlan {
    int index;
    ParamMap params;
    bool induced;
    int stab_dim;  // -1: not asserted
};

SuiteResult classification_suite() {
    SuiteResult R{"classification", {}, true};
    mpq_class third(1, 3);
    std::vector<EntryPlan> plan = {
        {1, {{"a", 1}, {"b", 1}, {"c", 1}}, true, -1},
        {1, {{"a", 2}, {"b", 3}, {"c", 5}}, true, -1},
        {2, {{"a", 1}, {"b", 1}}, true, -1},
        {2, {{"a", 2}, {"b", 3}}, true, -1},
        {3, {{"a", 1}}, true, -1},
        {3, {{"a", 2}}, true, -1},
        {4, {{"a", 1}, {"b", 1}}, false, 2},
        {4, {{"a", 0}, {"b", 0}}, true, -1},
        {5, {{"a", 1}}, true, -1},
        {5, {{"a", 2}}, true, -1},
        {6, {{"a", 1}}, true, -1},
        {6, {{"a", 3}}, true, -1},
        {7, {{"a", 1}, {"b", 1}, {"c", 1}}, true, -1},
        {7, {{"a", 2}, {"b", 3}, {"c", 5}}, true, -1},
        {8, {{"a", 1}, {"b", 1}, {"sign", 1}}, false, 2},
        {8, {{"a", 0}, {"b", 0}, {"sign", -1}}, true, -1},
        {9, {{"a", 1}}, true, -1},
        {9, {{"a", 2}}, true, -1},
        {10, {{"a", 1}}, false, 2},
        {10, {{"a", -third}}, true, -1},
        {11, {{"b", 1}, {"c", 1}}, false, 3},
        {11, {{"b", 2}, {"c", 0}}, true, -1},
        {12, {{"b", 1}, {"c", 1}}, false, 3},
        {12, {{"b", 2}, {"c", 0}}, true, -1},
        {13, {{"b", 1}, {"c", 1}}, false, 3},
        {13, {{"b", 3}, {"c", 0}}, false, 3},
    };
    for (const auto& pl : plan) {
        DhcEntry e = dhc_catalog(pl.index, pl.params);
        std::ostringstream tag;
        tag << "entry " << pl.index << " (";
        bool first = true;
        for (const auto& [k, v] : pl.params) {
            if (!first) tag << ",";
            tag << k << "=" << v;
            first = false;
        }
        tag << ")";
        std::string t = tag.str();

        R.add(t + ": Poisson", is_poisson(e.Lambda));
        MultiVec major = expand_srmi(e.major.alpha, e.major.frame);
        R.add(t + ": decomposition exact", major + e.twist == e.Lambda);
        bool twist_ok = e.twist.is_zero()
                        || (is_poisson(e.twist) && schouten(major, e.twist).is_zero());
        R.add(t + ": twist Poisson and compatible", twist_ok);

        auto stab = stabilizer(e.Lambda);
        bool member = j2_image_membership(e.Lambda, stab);
        R.add(t + ": frame realization matches wedge-image membership",
              e.frame_induced == pl.induced && member == pl.induced
                  && e.certificate.has_value() == pl.induced);
        if (pl.stab_dim >= 0) {
            bool dim_ok = long(stab.size()) == pl.stab_dim;
            bool gens_ok = !e.stab_gens.empty();
            IncrementalSpan span(9);
            for (const auto& g : e.stab_gens) {
                gens_ok = gens_ok && schouten(e.Lambda, j1(g)).is_zero();
                std::vector<Scalar> flat;
                for (const auto& row : g)
                    for (const Scalar& s : row) flat.push_back(s);
                span.add(std::move(flat));
            }
            gens_ok = gens_ok && span.rank() == pl.stab_dim;
            R.add(t + ": stabilizer dimension", dim_ok, fmt("dim %ld", long(stab.size())));
            R.add(t + ": recorded generators span the stabilizer", gens_ok);
        }
    }

    // curl of the bare quadric twist of entry 10
    {
        HomPoly q(3, 2);
        q.add_term({0, 2, 0}, Scalar(1));
        q.add_term({1, 0, 1}, Scalar(-2));
        MultiVec bare = mv_term(3, {1, 2}, q);
        MultiVec want(3, 1, 1);
        want.add_comp({1}, monomial(3, {1, 0, 0}, Scalar(-2)));
        want.add_comp({2}, monomial(3, {0, 1, 0}, Scalar(-2)));
        R.add("curl of the entry-10 quadric twist", curl(bare) == want);
        R.add("entry-10 quadric twist is Poisson and not divergence-free",
              is_poisson(bare) && !is_k_exact(bare));
    }

    // parameter guards
    {
        bool threw = false;
        try {
            dhc_catalog(5, {{"a", mpq_class(-1, 2)}});
        } catch (const ParameterViolation&) {
            threw = true;
        }
        R.add("entry 5 rejects the excluded parameter", threw);
    }
    {
        bool threw = false;
        try {
            dhc_catalog(11, {{"b", mpq_class(-1, 3)}, {"c", mpq_class(1)}});
        } catch (const ParameterViolation&) {
            threw = true;
        }
        R.add("entry 11 rejects the degenerate frame parameter", threw);
    }
    for (int bad : {0, 14}) {
        bool threw = false;
        try {
            dhc_catalog(bad);
        } catch (const UnknownIndex&) {
            threw = true;
        }
        R.add(fmt("index %ld rejected", bad), threw);
    }
    return R;
}

// --------------------------------------------------------------------- les

SuiteResult les_suite() {
    SuiteResult R{"les", {}, true};
    DhcEntry e3 = dhc_catalog(3, {{"a", mpq_class(1)}});
    DhcEntry e9 = dhc_catalog(9, {{"a", mpq_class(1)}});
    const DhcEntry* entries[2] = {&e3, &e9};
    const char* names[2] = {"shear", "nilpotent"};
    for (int w = 0; w < 2; ++w) {
        const SrmiStructure& S = *entries[w]->certificate;
        bool exact_ok = true, asm_ok = true, alt_ok = true, direct_ok = true;
        for (int r = 0; r <= 9; ++r) {
            auto slices = srmi_slices(S, r);
            long alt = 0, sgn = 1;
            for (const auto& sl : slices) {
                exact_ok = exact_ok && sl.les_ok;
                asm_ok = asm_ok && sl.assemble_ok;
                alt += sgn * (sl.dim_R - sl.dim_P + sl.dim_S);
                sgn = -sgn;
                if (sl.d >= 0)
                    direct_ok = direct_ok
                                && sl.dim_R
                                       == r_cohomology_direct(entries[w]->Lambda, sl.p, sl.d).dim;
            }
            alt_ok = alt_ok && alt == 0;
        }
        R.add(std::string("sequence exact at every node (") + names[w] + ")", exact_ok);
        R.add(std::string("reassembly matches the direct computation (") + names[w] + ")",
              asm_ok);
        R.add(std::string("alternating sum vanishes (") + names[w] + ")", alt_ok);
        R.add(std::string("pipeline equals brute-force slice dims (") + names[w] + ")",
              direct_ok);
    }
    // complement independence
    {
        const SrmiStructure& S = *e3.certificate;
        bool ok = true;
        for (int r = 0; r <= 6; ++r) {
            auto a = srmi_slices(S, r, false);
            auto b = srmi_slices(S, r, true);
            for (size_t i = 0; i < a.size(); ++i)
                ok = ok && a[i].dim_R == b[i].dim_R && a[i].dim_P == b[i].dim_P
                     && a[i].dim_S == b[i].dim_S && b[i].les_ok && b[i].assemble_ok;
        }
        R.add("dimensions independent of the complement choice", ok);
    }
    // public assembly helpers agree with the table at the coupled degrees
    {
        const SrmiStructure& S = *e3.certificate;
        long want[4] = {1, 3, 3, 1};
        bool ok = true;
        for (int p = 0; p <= 3; ++p) ok = ok && assemble(S, p, 3) == want[p];
        auto slices = srmi_slices(S, 3);
        for (int p = 0; p <= 3; ++p)
            ok = ok && s_cohomology(S, p, 3) == slices[p].dim_S;
        R.add("assembled values at the unit-parameter shear structure", ok);
    }
    return R;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"spectrum", "minors", "homotopy",
                                                   "classification", "les"};
    return names;
}

SuiteResult run_suite(const std::string& name, unsigned seed) {
    if (name == "spectrum") return spectrum_suite();
    if (name == "minors") return minors_suite(seed);
    if (name == "homotopy") return homotopy_suite(seed);
    if (name == "classification") return classification_suite();
    if (name == "les") return les_suite();
    throw UnknownSuite(name);
}

std::vector<SuiteResult> run_all_suites(unsigned seed) {
    std::vector<SuiteResult> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, seed));
    return out;
}

} // namespace quadcoh
