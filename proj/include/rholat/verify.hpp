#pragma once

/**
 * @file verify.hpp
 * @brief Cross-route self-verification battery behind `rholat verify`.
 *
 * Each check walks its parameter tuples in ascending order; the reported
 * counterexample is the smallest failing tuple.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "rholat/cotan_float.hpp"
#include "rholat/execution.hpp"

namespace rholat {

struct VerifyOptions {
    std::int64_t max_p = 51;
    double tolerance = kDefaultTolerance;
    Execution exec = Execution::parallel;
    int jobs = 1;
};

struct CheckResult {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    std::string counterexample; ///< first failing tuple and why; empty on pass

    bool passed() const { return failures == 0; }
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed())
                return false;
        return true;
    }
};

VerifyReport run_verify(const VerifyOptions& opt);

} // namespace rholat
