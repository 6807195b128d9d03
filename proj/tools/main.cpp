#include "quadcoh/jsonio.hpp"
#include "quadcoh/spectral.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

using namespace quadcoh;

namespace {

ParamMap parse_params(const std::vector<std::string>& kvs) {
    ParamMap out;
    for (const std::string& kv : kvs) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParameterViolation("--param expects name=value, got '" + kv + "'");
        Scalar v = parse_scalar(kv.substr(eq + 1));
        if (!v.is_real())
            throw ParameterViolation("parameter '" + kv.substr(0, eq) + "' must be rational");
        out[kv.substr(0, eq)] = v.re;
    }
    return out;
}

void print_catalog_row(const Json& row) {
    std::printf("%2d  %s\n", row["index"].get<int>(), row["tensor"].get<std::string>().c_str());
    std::printf("      frame:         %s\n", row["frame"].get<std::string>().c_str());
    std::printf("      decomposition: %s\n", row["decomposition"].get<std::string>().c_str());
    std::printf("      frame-induced: %s    parameters: %s\n",
                row["condition"].get<std::string>().c_str(),
                row["parameters"].get<std::string>().c_str());
}

std::string params_line(const Json& params) {
    std::string out;
    for (const auto& [k, v] : params.items())
        out += (out.empty() ? "" : ", ") + k + "=" + v.get<std::string>();
    return out.empty() ? "(none)" : out;
}

void print_cohomology(const Json& rep, int n) {
    std::printf("structure %s   params: %s   r_max %d%s\n",
                rep["structure"].get<std::string>().c_str(),
                params_line(rep["params"]).c_str(), rep["r_max"].get<int>(),
                rep.contains("mode") ? "   (direct; no frame pipeline)" : "");
    int dmax = rep["r_max"].get<int>();
    std::printf("dimensions, rows p / columns coefficient degree d (. = 0)\n");
    std::printf("p\\d");
    for (int d = 0; d <= dmax; ++d) std::printf(" %3d", d);
    std::printf("\n");
    for (int p = 0; p <= n; ++p) {
        std::printf("%3d", p);
        for (int d = 0; d <= dmax; ++d) {
            long dim = 0;
            bool seen = false;
            for (const auto& s : rep["slices"])
                if (s["p"] == p && s["r"].get<int>() == d + n - p) {
                    dim = s["dim_R"].get<long>();
                    seen = true;
                }
            if (!seen || dim == 0) std::printf("   .");
            else std::printf(" %3ld", dim);
        }
        std::printf("\n");
    }
    std::printf("representatives:\n");
    for (const auto& s : rep["slices"]) {
        if (s["dim_R"].get<long>() == 0) continue;
        int p = s["p"].get<int>(), r = s["r"].get<int>();
        std::printf("  p=%d d=%d  dim %ld\n", p, r - n + p, s["dim_R"].get<long>());
        for (const auto& rec : s["reps_R"])
            std::printf("      %s\n", to_string(mv_from_json(rec, n)).c_str());
    }
    if (!rep.contains("mode")) {
        int bad = 0;
        for (const auto& s : rep["slices"])
            if (!(s["checks"]["les"] == true && s["checks"]["assemble"] == true)) ++bad;
        if (bad)
            std::printf("EXACTNESS CHECKS FAILED on %d slice(s)\n", bad);
        else
            std::printf("exactness and reassembly checks passed on every slice\n");
    }
}

void print_spectrum(const Json& rep) {
    std::printf("structure %s   params: %s\n", rep["structure"].get<std::string>().c_str(),
                params_line(rep["params"]).c_str());
    for (const auto& rec : rep["reports"]) {
        int r = rec["r"].get<int>();
        if (!(rec["available"] == true)) {
            std::printf("r=%d: no simultaneous triangularization over Q(i)\n", r);
            continue;
        }
        std::string dims;
        for (const auto& d : rec["kernel_dims"])
            dims += (dims.empty() ? "" : ",") + std::to_string(d.get<int>());
        std::printf("r=%d: mu=%ld  s=%d  kernel_dims=[%s]\n", r, rec["mu"].get<long>(),
                    rec["s"].get<int>(), dims.c_str());
        std::string ke;
        for (const auto& I : rec["kernel_exponents"]) {
            ke += ke.empty() ? "" : " ";
            ke += "(";
            for (size_t i = 0; i < I.size(); ++i)
                ke += (i ? "," : "") + std::to_string(I[i].get<int>());
            ke += ")";
        }
        std::printf("      zero-diagonal index sets: %s\n", ke.empty() ? "none" : ke.c_str());
        // group equal consecutive tuples (the multiset is emitted sorted)
        const Json& spec = rec["spectrum"];
        std::string line;
        for (size_t i = 0; i < spec.size();) {
            size_t j = i;
            while (j < spec.size() && spec[j] == spec[i]) ++j;
            std::string tup = "(";
            for (size_t t = 0; t < spec[i].size(); ++t)
                tup += (t ? ", " : "") + spec[i][t].get<std::string>();
            tup += ")";
            if (j - i > 1) tup += " x" + std::to_string(j - i);
            line += (line.empty() ? "" : "  ") + tup;
            i = j;
        }
        std::printf("      spectrum: %s\n", line.empty() ? "empty" : line.c_str());
    }
}

int print_verify(const Json& results) {
    int failed = 0;
    for (const auto& r : results) {
        int total = (int)r["checks"].size();
        bool pass = r["pass"] == true;
        std::printf("suite %-15s %s  (%d checks)\n", r["suite"].get<std::string>().c_str(),
                    pass ? "PASS" : "FAIL", total);
        for (const auto& c : r["checks"])
            if (!(c["pass"] == true)) {
                ++failed;
                std::printf("    FAIL %s%s%s\n", c["name"].get<std::string>().c_str(),
                            c.contains("detail") ? ": " : "",
                            c.contains("detail") ? c["detail"].get<std::string>().c_str() : "");
            }
    }
    return failed;
}

// --out writes the JSON report; stdout carries the table unless --json
void deliver(const Json& rep, const std::string& out, bool as_json,
             const std::function<void(const Json&)>& table) {
    if (!out.empty()) write_json(rep, out);
    if (as_json)
        write_json(rep, "-");
    else
        table(rep);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Koszul-type cohomology of quadratic Poisson tensors"};
    app.require_subcommand(1);

    auto* cat = app.add_subcommand("catalog", "list the quadratic structure catalog");
    int cat_index = 0;
    bool cat_json = false;
    std::string cat_out;
    cat->add_option("--index", cat_index, "show a single entry (1..13)");
    cat->add_flag("--json", cat_json, "machine-readable output");
    cat->add_option("--out", cat_out, "write the JSON listing to a file");

    auto* coh = app.add_subcommand("cohomology", "cohomology table of one structure");
    std::string coh_src, coh_out;
    std::vector<std::string> coh_params;
    int coh_rmax = 9;
    bool coh_json = false;
    coh->add_option("--structure", coh_src, "dhc:<index> or file:<path>")->required();
    coh->add_option("--param", coh_params, "catalog parameter name=value (rational)");
    coh->add_option("--rmax", coh_rmax, "largest numerator degree")->check(CLI::Range(0, 40));
    coh->add_option("--out", coh_out, "write the JSON report to a file");
    coh->add_flag("--json", coh_json, "machine-readable output");

    auto* spc = app.add_subcommand("spectrum", "joint spectra and kernel towers");
    std::string spc_src, spc_out;
    std::vector<std::string> spc_params;
    int spc_r = -1, spc_rmax = -1;
    bool spc_json = false;
    spc->add_option("--structure", spc_src, "dhc:<index> or file:<path>")->required();
    spc->add_option("--param", spc_params, "catalog parameter name=value (rational)");
    auto* opt_r = spc->add_option("--r", spc_r, "single numerator degree")->check(CLI::Range(0, 40));
    spc->add_option("--rmax", spc_rmax, "sweep degrees 0..rmax")->check(CLI::Range(0, 40))->excludes(opt_r);
    spc->add_option("--out", spc_out, "write the JSON report to a file");
    spc->add_flag("--json", spc_json, "machine-readable output");

    auto* ver = app.add_subcommand("verify", "run the property suites");
    std::string ver_suite, ver_out;
    unsigned ver_seed = 12345;
    bool ver_json = false;
    ver->add_option("--suite", ver_suite, "one of: spectrum, minors, homotopy, classification, les");
    ver->add_option("--seed", ver_seed, "seed for the randomized checks");
    ver->add_option("--out", ver_out, "write the JSON results to a file");
    ver->add_flag("--json", ver_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cat) {
            Json rep = cat->count("--index") ? Json::array({catalog_row_json(cat_index)})
                                             : catalog_rows_json();
            deliver(rep, cat_out, cat_json, [](const Json& r) {
                for (const auto& row : r) print_catalog_row(row);
            });
            return 0;
        }

        if (*coh) {
            ParsedStructure ps = resolve_structure(coh_src, parse_params(coh_params));
            Json rep = ps.srmi
                           ? cohomology_report_json(ps.name, ps.params, *ps.srmi, coh_rmax)
                           : direct_report_json(ps.name, ps.params, ps.Lambda, coh_rmax);
            int n = ps.Lambda.n;
            deliver(rep, coh_out, coh_json, [n](const Json& r) { print_cohomology(r, n); });
            if (!rep.contains("mode"))
                for (const auto& s : rep["slices"])
                    if (!(s["checks"]["les"] == true && s["checks"]["assemble"] == true)) return 1;
            return 0;
        }

        if (*spc) {
            ParsedStructure ps = resolve_structure(spc_src, parse_params(spc_params));
            if (!ps.srmi)
                throw ParameterViolation(
                    "spectral diagnostics need a frame presentation; '" + ps.name +
                    "' has no frame realization at these parameters");
            Json rep = Json::object();
            rep["structure"] = ps.name;
            rep["params"] = params_to_json(ps.params);
            Json recs = Json::array();
            if (spc_r >= 0) {
                recs.push_back(spectrum_record_json(*ps.srmi, spc_r));
            } else {
                int hi = spc_rmax >= 0 ? spc_rmax : 9;
                for (int r = 0; r <= hi; ++r) recs.push_back(spectrum_record_json(*ps.srmi, r));
            }
            rep["reports"] = recs;
            deliver(rep, spc_out, spc_json, [](const Json& r) { print_spectrum(r); });
            return 0;
        }

        // verify
        std::vector<SuiteResult> results;
        if (ver->count("--suite"))
            results.push_back(run_suite(ver_suite, ver_seed));
        else
            results = run_all_suites(ver_seed);
        Json arr = Json::array();
        bool all = true;
        for (const SuiteResult& r : results) {
            arr.push_back(suite_result_json(r));
            all = all && r.pass;
        }
        if (!ver_out.empty()) write_json(arr, ver_out);
        if (ver_json)
            write_json(arr, "-");
        else
            print_verify(arr);
        return all ? 0 : 1;
    } catch (const MathError& e) {
        bool input = dynamic_cast<const UnknownIndex*>(&e) ||
                     dynamic_cast<const ParameterViolation*>(&e) ||
                     dynamic_cast<const UnknownSuite*>(&e) ||
                     dynamic_cast<const IoError*>(&e) ||
                     dynamic_cast<const NotPoisson*>(&e) ||
                     dynamic_cast<const DegenerateFrame*>(&e) ||
                     dynamic_cast<const NonCommuting*>(&e);
        std::cerr << "error: " << e.what() << "\n";
        return input ? 2 : 1;
    }
}
