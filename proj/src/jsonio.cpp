#include "quadcoh/jsonio.hpp"
#include "quadcoh/spectral.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace quadcoh {

namespace {

Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    throw IoError("scalar entries must be rational strings or integers");
}

int int_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw IoError(std::string(what) + " must be an integer");
    return j.get<int>();
}

ScalarMat mat_from_json(const Json& j, int n, const char* what) {
    if (!j.is_array() || (int)j.size() != n)
        throw IoError(std::string(what) + " must be a list of " + std::to_string(n) + " rows");
    ScalarMat M(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || (int)row.size() != n)
            throw IoError(std::string(what) + " rows must have " + std::to_string(n) + " entries");
        for (int k = 0; k < n; ++k) M[i][k] = scalar_from_json(row[k]);
    }
    return M;
}

} // namespace

Json poly_to_json(const HomPoly& P) {
    Json j = Json::object();
    for (const auto& [m, c] : P.terms) {
        std::ostringstream key;
        for (size_t i = 0; i < m.size(); ++i) key << (i ? "," : "") << m[i];
        j[key.str()] = to_string(c);
    }
    return j;
}

HomPoly poly_from_json(const Json& j, int n) {
    if (!j.is_object()) throw IoError("polynomial literal must be an object");
    std::vector<std::pair<MultiIndex, Scalar>> terms;
    int deg = -1;
    for (const auto& [key, val] : j.items()) {
        MultiIndex m;
        std::istringstream in(key);
        std::string piece;
        while (std::getline(in, piece, ',')) {
            try {
                size_t used = 0;
                int e = std::stoi(piece, &used);
                if (used != piece.size() || e < 0) throw std::invalid_argument(piece);
                m.push_back(e);
            } catch (const std::exception&) {
                throw IoError("bad exponent string '" + key + "'");
            }
        }
        if ((int)m.size() != n)
            throw IoError("exponent string '" + key + "' does not have " + std::to_string(n) + " entries");
        int d = mi_degree(m);
        if (deg < 0) deg = d;
        if (d != deg) throw IoError("polynomial literal mixes degrees " + std::to_string(deg) +
                                    " and " + std::to_string(d));
        terms.emplace_back(std::move(m), scalar_from_json(val));
    }
    HomPoly P(n, deg < 0 ? 0 : deg);
    for (const auto& [m, c] : terms) P.add_term(m, c);
    return P;
}

Json mv_to_json(const MultiVec& A) {
    Json j = Json::array();
    for (const auto& [k, poly] : A.comps) {
        if (poly.is_zero()) continue;
        Json rec = Json::object();
        Json idx = Json::array();
        for (int v : k) idx.push_back(v + 1);
        rec["indices"] = idx;
        rec["poly"] = poly_to_json(poly);
        j.push_back(rec);
    }
    return j;
}

MultiVec mv_from_json(const Json& j, int n) {
    if (!j.is_array()) throw IoError("multivector must be a list of {indices, poly} records");
    std::vector<std::pair<Tuple, HomPoly>> recs;
    for (const Json& rec : j) {
        if (!rec.is_object() || !rec.contains("indices") || !rec.contains("poly"))
            throw IoError("multivector records need 'indices' and 'poly'");
        const Json& idx = rec["indices"];
        if (!idx.is_array()) throw IoError("'indices' must be a list");
        Tuple k;
        for (const Json& v : idx) {
            int one_based = int_from_json(v, "index");
            if (one_based < 1 || one_based > n)
                throw IoError("index " + std::to_string(one_based) + " outside 1.." + std::to_string(n));
            k.push_back(one_based - 1);
        }
        for (size_t i = 1; i < k.size(); ++i)
            if (k[i - 1] >= k[i]) throw IoError("indices must be strictly increasing");
        HomPoly poly = poly_from_json(rec["poly"], n);
        if (!poly.is_zero()) recs.emplace_back(std::move(k), std::move(poly));
    }
    if (recs.empty())
        throw IoError("empty multivector: wedge and coefficient degrees cannot be inferred");
    int p = (int)recs.front().first.size(), deg = recs.front().second.deg;
    MultiVec A(n, p, deg);
    for (const auto& [k, poly] : recs) {
        if ((int)k.size() != p)
            throw IoError("multivector mixes wedge degrees " + std::to_string(p) +
                          " and " + std::to_string(k.size()));
        if (poly.deg != deg)
            throw IoError("multivector mixes coefficient degrees " + std::to_string(deg) +
                          " and " + std::to_string(poly.deg));
        A.add_comp(k, poly);
    }
    return A;
}

ParsedStructure structure_from_json(const Json& j) {
    if (!j.is_object()) throw IoError("structure file must hold a JSON object");
    for (const auto& [key, val] : j.items()) {
        (void)val;
        if (key != "n" && key != "alpha" && key != "frame" && key != "bivector" && key != "name")
            throw IoError("unknown structure key '" + key + "'");
    }
    if (!j.contains("n")) throw IoError("structure file needs the dimension 'n'");
    int n = int_from_json(j["n"], "'n'");
    if (n < 2) throw IoError("'n' must be at least 2");

    ParsedStructure out;
    out.name = j.value("name", std::string("file"));

    if (j.contains("bivector")) {
        if (j.contains("alpha") || j.contains("frame"))
            throw IoError("give either 'bivector' or 'alpha'+'frame', not both");
        MultiVec A = mv_from_json(j["bivector"], n);
        if (A.p != 2 || A.deg != 2)
            throw ParameterViolation("'bivector' must be a bivector with quadratic coefficients");
        if (!is_poisson(A)) throw NotPoisson();
        out.Lambda = A;
        return out;
    }

    if (!j.contains("alpha") || !j.contains("frame"))
        throw IoError("structure file needs 'alpha' and 'frame' (or 'bivector')");
    ScalarMat alpha = mat_from_json(j["alpha"], n, "'alpha'");
    bool all_zero = true;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (!(alpha[i][k] + alpha[k][i]).is_zero())
                throw ParameterViolation("'alpha' must be skew-symmetric");
            all_zero = all_zero && alpha[i][k].is_zero();
        }
    if (all_zero)
        throw ParameterViolation("'alpha' = 0 gives the zero tensor; nothing to compute");
    const Json& fr = j["frame"];
    if (!fr.is_array() || (int)fr.size() != n)
        throw IoError("'frame' must be a list of " + std::to_string(n) + " matrices");
    std::vector<ScalarMat> mats;
    for (int i = 0; i < n; ++i) mats.push_back(mat_from_json(fr[i], n, "'frame' matrix"));
    SrmiStructure S = make_srmi(alpha, build_frame(mats));
    out.srmi = S;
    out.Lambda = S.Lambda;
    return out;
}

ParsedStructure load_structure_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open structure file '" + path + "'");
    Json j;
    try {
        f >> j;
    } catch (const Json::parse_error& e) {
        throw IoError("bad JSON in '" + path + "': " + e.what());
    }
    ParsedStructure out = structure_from_json(j);
    if (out.name == "file") out.name = path;
    return out;
}

ParsedStructure resolve_structure(const std::string& source, const ParamMap& params) {
    if (source.rfind("dhc:", 0) == 0) {
        std::string tail = source.substr(4);
        int index = 0;
        try {
            size_t used = 0;
            index = std::stoi(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(tail);
        } catch (const std::exception&) {
            throw IoError("bad catalog index '" + tail + "'");
        }
        DhcEntry e = dhc_catalog(index, params);
        ParsedStructure out;
        out.name = source;
        out.params = e.params;
        out.srmi = e.certificate;
        out.Lambda = e.Lambda;
        return out;
    }
    if (source.rfind("file:", 0) == 0) {
        if (!params.empty())
            throw ParameterViolation("--param applies to catalog structures only");
        return load_structure_file(source.substr(5));
    }
    throw IoError("structure source must be dhc:<index> or file:<path>");
}

Json params_to_json(const ParamMap& params) {
    Json j = Json::object();
    for (const auto& [k, v] : params) j[k] = v.get_str();
    return j;
}

Json catalog_rows_json() {
    Json j = Json::array();
    for (const auto& row : catalog_rows()) j.push_back(catalog_row_json(row.index));
    return j;
}

Json catalog_row_json(int index) {
    for (const auto& row : catalog_rows()) {
        if (row.index != index) continue;
        Json j = Json::object();
        j["index"] = row.index;
        j["tensor"] = row.tensor;
        j["frame"] = row.frame;
        j["decomposition"] = row.decomposition;
        j["condition"] = row.condition;
        j["parameters"] = row.parameters;
        return j;
    }
    throw UnknownIndex(index);
}

Json spectrum_record_json(const SrmiStructure& S, int r) {
    Json rec = Json::object();
    rec["r"] = r;
    try {
        OperatorTuple T = induced_triangular_ops(S, r);
        KernelTower tower = kernel_tower(T);
        SpectrumReport js = joint_spectrum(S, r);
        if (!js.ok) throw TriangularizationFailed();
        rec["available"] = true;
        Json spec = Json::array();
        for (const auto& [point, mult] : js.spectrum) {
            Json tup = Json::array();
            for (const Scalar& v : point) tup.push_back(to_string(v));
            for (int m = 0; m < mult; ++m) spec.push_back(tup);
        }
        rec["spectrum"] = spec;
        rec["mu"] = tower.mu;
        rec["s"] = tower.s;
        rec["kernel_dims"] = tower.kernel_dims;
        Json ke = Json::array();
        for (const MultiIndex& I : kernel_exponents(S, r)) ke.push_back(I);
        rec["kernel_exponents"] = ke;
    } catch (const TriangularizationFailed&) {
        rec["available"] = false;
    }
    return rec;
}

Json slice_to_json(const SliceReport& s) {
    Json j = Json::object();
    j["p"] = s.p;
    j["r"] = s.r;
    j["dim_R"] = s.dim_R;
    j["dim_P"] = s.dim_P;
    j["dim_S"] = s.dim_S;
    Json reps = Json::array();
    for (const MultiVec& rep : s.reps_R) reps.push_back(mv_to_json(rep));
    j["reps_R"] = reps;
    j["checks"] = Json{{"les", s.les_ok}, {"assemble", s.assemble_ok}};
    return j;
}

Json cohomology_report_json(const std::string& name, const ParamMap& params,
                            const SrmiStructure& S, int r_max) {
    Json rep = Json::object();
    rep["structure"] = name;
    rep["params"] = params_to_json(params);
    rep["r_max"] = r_max;
    Json slices = Json::array();
    for (int r = 0; r <= r_max; ++r)
        for (const SliceReport& s : srmi_slices(S, r)) slices.push_back(slice_to_json(s));
    rep["slices"] = slices;
    return rep;
}

Json direct_report_json(const std::string& name, const ParamMap& params,
                        const MultiVec& Lambda, int r_max) {
    Json rep = Json::object();
    rep["structure"] = name;
    rep["params"] = params_to_json(params);
    rep["r_max"] = r_max;
    rep["mode"] = "direct";
    Json slices = Json::array();
    for (int r = 0; r <= r_max; ++r)
        for (int p = 0; p <= Lambda.n; ++p) {
            int d = r - Lambda.n + p;
            if (d < 0) continue;
            DirectSlice ds = r_cohomology_direct(Lambda, p, d);
            Json j = Json::object();
            j["p"] = p;
            j["r"] = r;
            j["dim_R"] = ds.dim;
            Json reps = Json::array();
            for (const MultiVec& rep2 : ds.reps) reps.push_back(mv_to_json(rep2));
            j["reps_R"] = reps;
            slices.push_back(j);
        }
    rep["slices"] = slices;
    return rep;
}

Json suite_result_json(const SuiteResult& r) {
    Json j = Json::object();
    j["suite"] = r.suite;
    j["pass"] = r.pass;
    Json checks = Json::array();
    for (const SuiteCheck& c : r.checks) {
        Json cj = Json::object();
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

void write_json(const Json& j, const std::string& path) {
    std::string text = j.dump(2);
    text += '\n';
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw IoError("writing '" + path + "' failed");
}

} // namespace quadcoh
