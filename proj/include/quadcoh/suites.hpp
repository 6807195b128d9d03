#pragma once

#include <string>
#include <vector>

namespace quadcoh {

/* Self-contained verification suites covering the computational pillars:
 * spectral diagnostics, minor identities, homotopy/structure identities,
 * the catalog classification data, and the long-exact-sequence pipeline.
 * Each suite returns named pass/fail checks; `pass` is their conjunction. */
struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCheck> checks;
    bool pass = true;

    void add(const std::string& name, bool ok, const std::string& detail = "");
};

// {"spectrum", "minors", "homotopy", "classification", "les"}
const std::vector<std::string>& suite_names();

// throws ParameterViolation for an unknown suite name
SuiteResult run_suite(const std::string& name, unsigned seed = 12345);

std::vector<SuiteResult> run_all_suites(unsigned seed = 12345);

} // namespace quadcoh
