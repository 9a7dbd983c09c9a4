#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace opmetric {

enum class CheckSuite { Metric, Ball, Convexity, Dynamics, All };

// Accepts "metric", "ball", "convexity", "dynamics", "all" (InputError
// otherwise).
CheckSuite parse_suite(const std::string& name);
const char* suite_name(CheckSuite suite);

struct CheckOutcome {
    std::string name;
    bool pass;
    double worst;     // worst observed defect, check-specific units
    double tolerance; // pass iff worst <= tolerance (and no hard violation)
    int samples;      // instances exercised
};

// Runs the property checks of a suite on seeded random instances. The same
// (suite, samples, seed) triple always produces the same outcomes in the
// same order.
std::vector<CheckOutcome> run_checks(CheckSuite suite, int samples, std::uint64_t seed);

} // namespace opmetric
