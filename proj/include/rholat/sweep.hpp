#pragma once

/**
 * @file sweep.hpp
 * @brief Parameter-grid sweeps.
 *
 * A sweep enumerates its parameter tuples (keys) in ascending order, drops
 * keys listed in an optional skip set, and evaluates the rest through
 * for_each_index. Rows come back in key order for any worker count.
 */

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rholat/brieskorn.hpp"
#include "rholat/cotan_float.hpp"
#include "rholat/execution.hpp"
#include "rholat/floer.hpp"
#include "rholat/involution.hpp"

namespace rholat {

/// Inclusive integer range "first:last[:step]" (or a single value).
struct IntRange {
    std::int64_t first = 0;
    std::int64_t last = -1;
    std::int64_t step = 1;

    static IntRange parse(const std::string& text);
    std::vector<std::int64_t> values() const;
};

using SweepKey = std::vector<std::int64_t>;

struct SweepOptions {
    Execution exec = Execution::parallel;
    int jobs = 1;
    double tolerance = kDefaultTolerance;
    const std::set<SweepKey>* skip = nullptr;
};

/// Lens rho-invariants: key (p, q, l, involution index A=0 B=1 Bprime=2).
struct LensRow {
    SweepKey key;
    std::int64_t p, q, ell;
    Involution inv;
    std::optional<Rational> exact;
    FloatSumResult numeric;
};

/// Cotangent sums at odd p: key (p, q, l), l even in [2, p-1].
struct SumsRow {
    SweepKey key;
    std::int64_t p, q, ell;
    Rational delta;
    std::int64_t delta_tau;
    double delta_float;
    double delta_tau_float;
};

/// Sigma(2,p,q) rank vectors: key (p, q).
struct FloerRow {
    SweepKey key;
    std::int64_t p, q;
    std::int64_t reps;
    GradedRanks<8> instanton;
    std::int64_t signature;
    GradedRanks<4> ic_natural;
};

std::vector<SweepKey> lens_keys(const IntRange& p, const IntRange& q);
std::vector<SweepKey> sums_keys(const IntRange& p, const IntRange& q);
std::vector<SweepKey> floer_keys(const IntRange& p, const IntRange& q);

LensRow eval_lens(const SweepKey& key, double tolerance);
SumsRow eval_sums(const SweepKey& key, double tolerance);
FloerRow eval_floer(const SweepKey& key, double tolerance);

std::vector<LensRow> sweep_lens(const IntRange& p, const IntRange& q, const SweepOptions& opt);
std::vector<SumsRow> sweep_sums(const IntRange& p, const IntRange& q, const SweepOptions& opt);
std::vector<FloerRow> sweep_floer(const IntRange& p, const IntRange& q, const SweepOptions& opt);

} // namespace rholat
