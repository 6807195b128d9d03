#pragma once

#include "quadcoh/frames.hpp"

#include <map>
#include <optional>
#include <string>

namespace quadcoh {

using ParamMap = std::map<std::string, mpq_class>;

/* One instantiated entry of the Dufour–Haraki classification of quadratic
 * Poisson structures on R^3.  Every entry splits as a frame-induced major
 * part plus a compatible twist; `certificate` carries a frame realization of
 * the full tensor whenever one exists.  All recorded data is re-verified by
 * exact computation on construction. */
struct DhcEntry {
    int index = 0;
    ParamMap params;
    MultiVec Lambda;
    SrmiStructure major;            // frame-induced part of the decomposition
    MultiVec twist;                 // Lambda - major, compatible Poisson
    bool frame_induced = false;     // does Lambda itself admit a frame realization
    std::optional<SrmiStructure> certificate;
    std::vector<ScalarMat> stab_gens;   // known stabilizer generators (may be empty)
    std::vector<MultiVec> j2_gens;      // known spanning set of J^2(g ^ g)
};

// catalog entry by index 1..13; missing parameters default to 1
// ("sign" of entry 8 defaults to +1).  Throws UnknownIndex / ParameterViolation.
DhcEntry dhc_catalog(int index, const ParamMap& params = {});

struct CatalogRow {
    int index;
    std::string tensor;
    std::string frame;
    std::string decomposition;
    std::string condition;          // when the entry is frame-induced
    std::string parameters;
};
const std::vector<CatalogRow>& catalog_rows();

// the function-induced tensor Pi_f = sum_i (d_i f) d_{i+1} ^ d_{i+2} on R^3
MultiVec pi_tensor(const HomPoly& f);

} // namespace quadcoh
