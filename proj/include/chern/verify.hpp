#pragma once

#include <cstdint>
#include <string>

#include "chern/report.hpp"

namespace chern {

// Knobs for the verification suites. Defaults match the desk-scale budget:
// dimensions through 8, genus through 8, product order through 8, a thousand
// randomized instances per family, and a fixed seed so runs are reproducible.
struct VerifyOptions {
    int n_max = 8;
    int g_max = 8;
    int m_max = 8;
    int trials = 1000;
    std::uint64_t seed = 0x5eed5eedULL;
    std::string fixture_dir;
};

// Runs one of the named suites: "lemmas", "theorems", "hilbert", "moduli",
// "holonomy", or "all" (the five in that order). Unknown names throw
// SchemaError. Documented reading ambiguities surface as WARN lines; genuine
// identity failures as FAIL.
Report verify_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace chern
