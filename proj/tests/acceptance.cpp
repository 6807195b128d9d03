// End-to-end acceptance run: nine top-level checks, one PASS/FAIL line each.
// Returns the number of failed checks.

#include "quadcoh/catalog.hpp"
#include "quadcoh/pcohomology.hpp"
#include "quadcoh/suites.hpp"

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

using namespace quadcoh;

static int failures = 0;

static void criterion(int k, bool ok, const char* what) {
    std::printf("criterion %d: %s — %s\n", k, ok ? "PASS" : "FAIL", what);
    if (!ok) ++failures;
}

static void note(const char* fmt, ...) {
    std::va_list ap;
    va_start(ap, fmt);
    std::printf("    note: ");
    std::vprintf(fmt, ap);
    std::printf("\n");
    va_end(ap);
}

// span of the coboundary image at (p, d): columns are boundaries of the
// (p-1, d-1) basis cochains
static IncrementalSpan boundary_span(const MultiVec& Lambda, int p, int d) {
    int n = Lambda.n;
    IncrementalSpan sp(int(r_space_dim(n, p, d)));
    if (p >= 1 && d >= 1)
        for (const Tuple& t : increasing_tuples(n, p - 1))
            for (const MultiIndex& m : monomial_basis(n, d - 1))
                sp.add(mv_coords(schouten(Lambda, mv_term(n, t, monomial(n, m))), p, d));
    return sp;
}

// ---------------------------------------------------------------- 1 and 2

static long shear_golden(int p, int d) {
    if (p == 0 && d == 0) return 1;
    if (p == 1 && d == 1) return 3;
    if (p == 2 && d == 2) return 3;
    if (p == 3 && (d == 0 || d == 3)) return 1;
    return 0;
}

// reference dimension table for catalog entry 9 at a = 1, as quoted
static long nilpotent_quoted(int p, int d) {
    if (p == 0) return d == 0 ? 1 : 0;
    if (p == 1) return d == 1 ? 3 : 0;
    if (p == 3) return 1;
    // p == 2
    if (d <= 1) return 1;
    if (d == 2) return 4;
    if (d == 3) return 1;
    return 2;  // 4 <= d <= 9
}

static void check_table_1() {
    DhcEntry e = dhc_catalog(3, {{"a", mpq_class(1)}});
    const SrmiStructure& S = *e.certificate;
    bool ok = true;
    for (int p = 0; p <= 3; ++p)
        for (int d = 0; d <= 9; ++d) {
            long got = r_cohomology_direct(e.Lambda, p, d).dim;
            if (got != shear_golden(p, d)) {
                ok = false;
                note("entry 3 at (%d,%d): computed %ld, expected %ld", p, d, got,
                     shear_golden(p, d));
            }
        }
    for (int r = 0; r <= 9 && ok; ++r)
        for (const SliceReport& sl : srmi_slices(S, r)) {
            ok = ok && sl.les_ok && sl.assemble_ok;
            if (sl.d >= 0) ok = ok && sl.dim_R == shear_golden(sl.p, sl.d);
        }
    criterion(1, ok, "entry-3 dimension table for d <= 9, with exactness and reassembly");
}

static MultiVec c1_rep(int n, int r) {
    mpq_class a = 1;
    HomPoly p12(n, r + 1), p23(n, r + 1), p31(n, r + 1);
    p12.add_term({1, 0, r}, Scalar(-a));
    if (r >= 1) p12.add_term({0, 2, r - 1}, Scalar(mpq_class(-a * r)));
    p23.add_term({1, r, 0}, Scalar(mpq_class(9) * a * a));
    p23.add_term({0, 0, r + 1}, Scalar(mpq_class(a * (3 * r - 1)) / mpq_class(r + 1)));
    p31.add_term({0, 1, r}, Scalar(a));
    MultiVec out(n, 2, r + 1);
    out.add_comp({0, 1}, p12);
    out.add_comp({1, 2}, p23);
    out.add_comp({0, 2}, -p31);
    return out;
}

static MultiVec c2_rep(int n, int r) {
    mpq_class a = 1;
    HomPoly p12(n, r + 1), p23(n, r + 1), p31(n, r + 1);
    if (r >= 3) p12.add_term({0, 4, r - 3}, Scalar(mpq_class(-a * (r - 2))));
    if (r >= 1) p12.add_term({0, 2, r - 1}, Scalar(1));
    if (r >= 2) p23.add_term({1, 2, r - 2}, Scalar(mpq_class(9) * a * a));
    p23.add_term({1, 0, r}, Scalar(mpq_class(-9 * a) / mpq_class(r)));
    if (r >= 1) p23.add_term({0, 2, r - 1}, Scalar(mpq_class(3 * a * (r - 3)) / mpq_class(r - 1)));
    p23.add_term({0, 0, r + 1}, Scalar(mpq_class(-3 * (r - 1)) / mpq_class(r * (r + 1))));
    if (r >= 1) p31.add_term({1, 1, r - 1}, Scalar(mpq_class(6 * a) / mpq_class(r - 1)));
    if (r >= 2) p31.add_term({0, 3, r - 2}, Scalar(-a));
    p31.add_term({0, 1, r}, Scalar(mpq_class(-1) / mpq_class(r)));
    MultiVec out(n, 2, r + 1);
    out.add_comp({0, 1}, p12);
    out.add_comp({1, 2}, p23);
    out.add_comp({0, 2}, -p31);
    return out;
}

static void check_table_2() {
    DhcEntry e = dhc_catalog(9, {{"a", mpq_class(1)}});
    int n = 3;
    bool table_ok = true;
    std::vector<std::vector<long>> computed(4, std::vector<long>(10));
    for (int p = 0; p <= 3; ++p)
        for (int d = 0; d <= 9; ++d) {
            long got = r_cohomology_direct(e.Lambda, p, d).dim;
            computed[p][d] = got;
            if (got != nilpotent_quoted(p, d)) {
                table_ok = false;
                note("entry 9 at (%d,%d): computed %ld, reference table says %ld", p, d, got,
                     nilpotent_quoted(p, d));
            }
        }
    if (!table_ok) {
        // Euler-characteristic audit: along each diagonal s = d - p the
        // alternating sum of cohomology dimensions must equal the alternating
        // sum of cochain-space dimensions, for any differential whatsoever.
        bool quoted_euler = true, computed_euler = true;
        for (int s = -3; s <= 6; ++s) {
            long chiE = 0, chiQ = 0, chiC = 0;
            for (int p = 0; p <= 3; ++p) {
                int d = p + s;
                if (d < 0 || d > 9) continue;
                long sgn = (p % 2 == 0) ? 1 : -1;
                chiE += sgn * r_space_dim(n, p, d);
                chiQ += sgn * nilpotent_quoted(p, d);
                chiC += sgn * computed[p][d];
            }
            if (chiQ != chiE) {
                quoted_euler = false;
                note("diagonal d-p=%d: reference table has alternating sum %ld, but the "
                     "cochain spaces force %ld",
                     s, chiQ, chiE);
            }
            computed_euler = computed_euler && chiC == chiE;
        }
        if (!quoted_euler)
            note("no differential on these spaces can realize the reference table; "
                 "the computed table %s the Euler-characteristic constraint",
                 computed_euler ? "does satisfy" : "also violates");
    }

    bool reps_ok = true;
    for (int r = 3; r <= 5; ++r) {
        int d = r + 1;
        MultiVec c1 = c1_rep(n, r), c2 = c2_rep(n, r);
        ClassStatus s1 = class_status(e.Lambda, c1);
        ClassStatus s2 = class_status(e.Lambda, c2);
        if (!s1.cocycle) {
            reps_ok = false;
            note("C1^%d (degree %d) is not a cocycle: its coboundary is %s", r, d,
                 to_string(schouten(e.Lambda, c1)).c_str());
        } else if (s1.bounding) {
            reps_ok = false;
            note("C1^%d is a coboundary", r);
        }
        if (!s2.cocycle || s2.bounding) {
            reps_ok = false;
            note("C2^%d: cocycle=%d bounding=%d", r, int(s2.cocycle), int(s2.bounding));
        }
        IncrementalSpan sp = boundary_span(e.Lambda, 2, d);
        long before = sp.rank();
        sp.add(mv_coords(c1, 2, d));
        sp.add(mv_coords(c2, 2, d));
        long growth = sp.rank() - before;
        if (growth != 2) {
            reps_ok = false;
            note("degree %d: the two formulas add %ld independent directions over the "
                 "coboundary image, not 2 (computed dim at (2,%d) is %ld)",
                 d, growth, d, computed[2][d]);
        }
    }
    if (!reps_ok)
        note("replacing the x.y^r term of C1^r by x.y^2.z^(r-2) yields a genuine "
             "nonbounding cocycle; C2^r passes as written and spans the computed line");
    criterion(2, table_ok && reps_ok,
              "entry-9 reference dimension table and closed-form degree 4-6 generators");
}

// ------------------------------------------------------------------ 3 and 4

static void check_rotation_example() {
    DhcEntry e = dhc_catalog(2, {{"a", mpq_class(1)}, {"b", mpq_class(0)}});
    const SrmiStructure& S = *e.certificate;
    int n = 3;
    bool ok = true;
    for (int t = 1; t <= 2; ++t) {
        int r = 3 * t;
        SpectrumReport rep = frame_spectrum(S);
        ok = ok && rep.ok;

        auto ke = kernel_exponents(S, r);
        ok = ok && ke.size() == 1 && ke[0] == MultiIndex{t - 1, t - 1, t - 1};

        KernelTower tower = kernel_tower(induced_triangular_ops(S, r));
        ok = ok && tower.mu == 1 && tower.s == 1
             && tower.kernel_dims == std::vector<int>{1};

        // the joint kernel line is (x^2+y^2)^t z^t: the candidate satisfies
        // X_j f = delta_j f for every frame field, and the kernel is a line
        HomPoly disc(n, 2);
        disc.add_term({2, 0, 0}, Scalar(1));
        disc.add_term({0, 2, 0}, Scalar(1));
        HomPoly f = monomial(n, MultiIndex{0, 0, t});
        for (int i = 0; i < t; ++i) f = f * disc;
        for (int j = 0; j < n; ++j)
            ok = ok && (apply_linvf(S.X[j], f) - f * S.delta[j]).is_zero();
        if (!ok) {
            note("rotation structure fails at t=%d", t);
            break;
        }
    }
    for (int r = 1; r <= 8; ++r) {
        auto H = p_cohomology(S, r);
        long tot = 0;
        for (long v : H.dims) tot += v;
        bool acyclic = tot == 0;
        if (acyclic != (r % 3 != 0)) {
            ok = false;
            note("rotation structure at degree %d: total cohomology %ld", r, tot);
        }
    }
    criterion(3, ok, "rotation structure: one-line kernel (x^2+y^2)^t z^t, acyclic off 3|r");
}

static void check_deep_tower_example() {
    DhcEntry e = dhc_catalog(3, {{"a", mpq_class(0)}});
    KernelTower tower = kernel_tower(induced_triangular_ops(*e.certificate, 3));
    bool ok = tower.mu == 3 && tower.s == 3
              && tower.kernel_dims == std::vector<int>({1, 1, 1})
              && tower.pivots.size() == 3;
    if (ok) {
        // stage lines z1^2 z3, z1 z2 z3, z2^2 z3 up to the coordinate
        // permutation freedom of the triangularization
        auto mons = monomial_basis(3, 3);
        std::vector<MultiIndex> want = {{0, 1, 2}, {1, 1, 1}, {0, 1, 2}};
        for (int a = 0; a < 3; ++a) {
            MultiIndex m = mons[tower.pivots[a]];
            std::sort(m.begin(), m.end());
            ok = ok && m == want[a];
        }
    }
    if (!ok)
        note("three-stage tower: mu=%ld s=%d stage dims size %zu", tower.mu, tower.s,
             tower.kernel_dims.size());
    criterion(4, ok, "degenerate shear: three unit tower stages with the expected lines");
}

// ------------------------------------------------------------- 5, 6, 7

static bool suite_passes(const char* name, unsigned seed) {
    SuiteResult r = run_suite(name, seed);
    if (!r.pass)
        for (const auto& c : r.checks)
            if (!c.pass) note("suite %s: %s", name, c.name.c_str());
    return r.pass;
}

// ----------------------------------------------------------------- 8 and 9

static void check_joint_spectrum() {
    struct Probe {
        int index;
        ParamMap params;
    };
    std::vector<Probe> probes = {{2, {{"a", mpq_class(1)}, {"b", mpq_class(0)}}},
                                 {3, {{"a", mpq_class(1)}}},
                                 {9, {{"a", mpq_class(1)}}}};
    bool ok = true;
    for (const auto& pr : probes) {
        DhcEntry e = dhc_catalog(pr.index, pr.params);
        for (int r = 0; r <= 6; ++r) {
            SpectrumReport js = joint_spectrum(*e.certificate, r);
            bool eq = js.ok && js.spectrum == spectrum_formula(*e.certificate, r);
            if (!eq) note("entry %d, degree %d: diagonal read differs from the formula",
                          pr.index, r);
            ok = ok && eq;
        }
    }
    criterion(8, ok, "diagonal-read joint spectrum equals the closed formula (entries 2/3/9)");
}

static void check_preferred_classes() {
    bool ok = true;
    for (int idx : {3, 9}) {
        DhcEntry e = dhc_catalog(idx, {{"a", mpq_class(1)}});
        auto stab = stabilizer(e.Lambda);
        for (const auto& a : stab) {
            ClassStatus st = class_status(e.Lambda, j1(a));
            if (!(st.cocycle && !st.bounding)) {
                ok = false;
                note("entry %d: a stabilizer field is not a nonbounding cocycle", idx);
            }
        }
        for (int p = 1; p <= 3; ++p) {
            auto cands = preferred_classes(e.Lambda, stab, p, p);
            int nb = 0;
            for (const auto& c : cands) {
                if (!c.cocycle) {
                    ok = false;
                    note("entry %d: wedge-%d candidate fails to be a cocycle", idx, p);
                }
                if (!c.bounding) ++nb;
            }
            std::printf("    entry %d, wedge degree %d: %zu candidates, %d nonbounding\n",
                        idx, p, cands.size(), nb);
        }
    }
    {
        DhcEntry e = dhc_catalog(
            1, {{"a", mpq_class(1)}, {"b", mpq_class(1)}, {"c", mpq_class(1)}});
        ok = ok && is_k_exact(e.Lambda);
        HomPoly D = e.certificate->frame.D;
        HomPoly Dp = D;
        for (int p = 1; p <= 3; ++p) {
            bool cas = schouten(e.Lambda, mv_term(3, {}, Dp)).is_zero();
            if (cas) {
                auto basis = casimirs(e.Lambda, 3 * p);
                IncrementalSpan sp(int(r_space_dim(3, 0, 3 * p)));
                for (const auto& f : basis) sp.add(mv_coords(mv_term(3, {}, f), 0, 3 * p));
                cas = sp.contains(mv_coords(mv_term(3, {}, Dp), 0, 3 * p));
            }
            if (!cas) {
                ok = false;
                note("determinant power %d is not recognized as a casimir", p);
            }
            Dp = Dp * D;
        }
    }
    criterion(9, ok, "stabilizer classes, casimir-wedge candidates, determinant powers");
}

int main() {
    auto t0 = std::chrono::steady_clock::now();
    unsigned seed = 12345;

    check_table_1();
    check_table_2();
    check_rotation_example();
    check_deep_tower_example();
    criterion(5, suite_passes("classification", seed),
              "catalog decompositions, twists, stabilizer dimensions");
    criterion(6, suite_passes("minors", seed), "cofactor identities, random and catalog frames");

    {
        bool ok = suite_passes("homotopy", seed) && suite_passes("les", seed);
        // multiplicity equals the total of tower stage dimensions
        struct Probe {
            int index;
            ParamMap params;
        };
        std::vector<Probe> probes = {{2, {{"a", mpq_class(1)}, {"b", mpq_class(0)}}},
                                     {3, {{"a", mpq_class(1)}}},
                                     {3, {{"a", mpq_class(0)}}},
                                     {9, {{"a", mpq_class(1)}}}};
        for (const auto& pr : probes)
            for (int r = 0; r <= 6; ++r) {
                DhcEntry e = dhc_catalog(pr.index, pr.params);
                KernelTower tw = kernel_tower(induced_triangular_ops(*e.certificate, r));
                long sum = 0;
                for (int v : tw.kernel_dims) sum += v;
                if (tw.mu != sum || tw.mu != long(kernel_exponents(*e.certificate, r).size())) {
                    ok = false;
                    note("entry %d degree %d: multiplicity %ld, stage sum %ld", pr.index, r,
                         tw.mu, sum);
                }
            }
        criterion(7, ok, "squared differentials, homotopies, exact sequences, tower counts");
    }

    check_joint_spectrum();
    check_preferred_classes();

    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("%d of 9 criteria passed in %.1f s\n", 9 - failures, double(dt) / 1000.0);
    return failures;
}
