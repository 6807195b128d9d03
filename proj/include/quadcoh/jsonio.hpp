#pragma once

#include "quadcoh/catalog.hpp"
#include "quadcoh/pcohomology.hpp"
#include "quadcoh/suites.hpp"

#include <json.hpp>

namespace quadcoh {

using Json = nlohmann::ordered_json;

// polynomial literal: exponent string "e1,e2,...,en" -> scalar string
Json poly_to_json(const HomPoly& P);
HomPoly poly_from_json(const Json& j, int n);

// list of records {indices: [1-based increasing], poly: literal}
Json mv_to_json(const MultiVec& A);
MultiVec mv_from_json(const Json& j, int n);

/* A structure source resolved for the command line: either a catalog entry
 * (params filled with the defaults actually used; srmi present when the full
 * tensor is frame-realizable) or a structure file, which gives the frame
 * presentation {n, alpha, frame} or a bare quadratic bivector {n, bivector}.
 * Matrix entries and coefficients are rational/complex-rational strings;
 * plain integers are accepted. */
struct ParsedStructure {
    std::string name;
    ParamMap params;
    std::optional<SrmiStructure> srmi;
    MultiVec Lambda;
};

ParsedStructure structure_from_json(const Json& j);
ParsedStructure load_structure_file(const std::string& path);
// source = "dhc:<index>" (params allowed) or "file:<path>" (params rejected)
ParsedStructure resolve_structure(const std::string& source, const ParamMap& params);

Json params_to_json(const ParamMap& params);

Json catalog_rows_json();
Json catalog_row_json(int index);  // UnknownIndex when absent

/* Spectral diagnostics at one numerator degree r: the joint spectrum as a
 * list of value tuples (one per eigen-line, multiplicities expanded), the
 * multiplicity mu, the kernel-tower depth s with stage dimensions, and the
 * zero-diagonal index sets I = beta - (1,...,1).  Degrees where the frame
 * does not triangularize over Q(i) are reported with available = false. */
Json spectrum_record_json(const SrmiStructure& S, int r);

Json slice_to_json(const SliceReport& s);
// frame pipeline: every (p, r) slice with its exactness/reassembly checks
Json cohomology_report_json(const std::string& name, const ParamMap& params,
                            const SrmiStructure& S, int r_max);
// fallback for tensors without a frame realization: kernel/image ranks only
Json direct_report_json(const std::string& name, const ParamMap& params,
                        const MultiVec& Lambda, int r_max);

Json suite_result_json(const SuiteResult& r);

// 2-space indentation, trailing newline; path "" or "-" writes to stdout
void write_json(const Json& j, const std::string& path);

} // namespace quadcoh
