#pragma once

/**
 * @file floer.hpp
 * @brief Graded generator counts for I(Sigma(2,p,q)) and IC-natural(T(p,q)).
 *
 * Only chain groups are assembled. I+ is graded mod 8 by gr; the singular
 * instanton complex of the torus knot is graded mod 4: one generator at
 * sigma(T(p,q)) mod 4 from the trivial representation, and for each
 * irreducible alpha two generators at mu(alpha) and two at mu(alpha) + 1.
 * Vectors are indexed by grading 0, 1, 2, ...
 */

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rholat/brieskorn.hpp"
#include "rholat/execution.hpp"

namespace rholat {

template <std::size_t N>
struct GradedRanks {
    std::array<std::int64_t, N> ranks{};

    std::int64_t total() const { return std::accumulate(ranks.begin(), ranks.end(), std::int64_t{0}); }

    friend bool operator==(const GradedRanks&, const GradedRanks&) = default;
};

/// floer_record for every representation, computed by index.
std::vector<FloerRecord> floer_records(const BrieskornSphere& s, const SeifertData& seifert,
                                       const std::vector<RotationNumbers>& reps,
                                       Execution exec = Execution::serial, int jobs = 1,
                                       double tolerance = kDefaultTolerance);

GradedRanks<8> instanton_ranks(const std::vector<FloerRecord>& records);
GradedRanks<8> instanton_ranks(const BrieskornSphere& s);

GradedRanks<4> ic_natural_ranks(std::int64_t signature, const std::vector<FloerRecord>& records);
GradedRanks<4> ic_natural_ranks(std::int64_t p, std::int64_t q);

struct FloerReport {
    BrieskornSphere sphere;
    SeifertData seifert;
    std::vector<FloerRecord> records; ///< lexicographic in (l2, l3)
    GradedRanks<8> instanton;
    std::int64_t signature = 0;
    int signature_mod4 = 0;
    GradedRanks<4> ic_natural;
};

FloerReport floer_report(const BrieskornSphere& s, Execution exec = Execution::serial, int jobs = 1,
                         double tolerance = kDefaultTolerance);

} // namespace rholat
