#include "rholat/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "rholat/errors.hpp"
#include "rholat/lattice_exact.hpp"
#include "rholat/lens_rho.hpp"

namespace rholat {

int default_jobs()
{
    if (const char* env = std::getenv("RHO_LATTICE_JOBS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1)
            return static_cast<int>(n);
    }
    return omp_get_max_threads();
}

IntRange IntRange::parse(const std::string& text)
{
    std::vector<std::int64_t> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(!item.empty() && used == item.size(), "bad range '" + text + "'");
        parts.push_back(v);
    }
    require(parts.size() >= 1 && parts.size() <= 3, "bad range '" + text + "'");
    IntRange r;
    r.first = parts[0];
    r.last = parts.size() >= 2 ? parts[1] : parts[0];
    r.step = parts.size() == 3 ? parts[2] : 1;
    require(r.step >= 1, "range step must be >= 1 in '" + text + "'");
    return r;
}

std::vector<std::int64_t> IntRange::values() const
{
    std::vector<std::int64_t> v;
    for (std::int64_t x = first; x <= last; x += step)
        v.push_back(x);
    return v;
}

std::vector<SweepKey> lens_keys(const IntRange& p, const IntRange& q)
{
    std::vector<SweepKey> keys;
    for (std::int64_t pp : p.values()) {
        if (pp < 2)
            continue;
        for (std::int64_t qq : q.values()) {
            if (qq < 1 || qq >= pp || std::gcd(pp, qq) != 1)
                continue;
            for (std::int64_t ell = 0; ell < pp; ++ell)
                for (std::int64_t inv = 0; inv < 3; ++inv)
                    keys.push_back({pp, qq, ell, inv});
        }
    }
    return keys;
}

std::vector<SweepKey> sums_keys(const IntRange& p, const IntRange& q)
{
    std::vector<SweepKey> keys;
    for (std::int64_t pp : p.values()) {
        if (pp < 3 || pp % 2 == 0)
            continue;
        for (std::int64_t qq : q.values()) {
            if (qq < 1 || qq >= pp || std::gcd(pp, qq) != 1)
                continue;
            for (std::int64_t ell = 2; ell < pp; ell += 2)
                keys.push_back({pp, qq, ell});
        }
    }
    return keys;
}

std::vector<SweepKey> floer_keys(const IntRange& p, const IntRange& q)
{
    std::vector<SweepKey> keys;
    for (std::int64_t pp : p.values())
        for (std::int64_t qq : q.values())
            if (pp >= 3 && qq >= 3 && pp % 2 == 1 && qq % 2 == 1 && std::gcd(pp, qq) == 1)
                keys.push_back({pp, qq});
    return keys;
}

LensRow eval_lens(const SweepKey& key, double tolerance)
{
    static constexpr Involution kinds[] = {Involution::A, Involution::B, Involution::Bprime};
    LensRow row{key, key[0], key[1], key[2], kinds[key[3]], std::nullopt, {}};
    const LensSpace space = LensSpace::make(row.p, row.q);
    const LensRho r = rho_lens(space, U1Rep::make(space, row.ell), row.inv, tolerance);
    row.exact = r.exact;
    row.numeric = r.numeric;
    return row;
}

SumsRow eval_sums(const SweepKey& key, double tolerance)
{
    const std::int64_t p = key[0], q = key[1], ell = key[2];
    SumsRow row{key, p, q, ell, delta_exact(p, q, ell), delta_tau_exact(p, q, ell),
                delta_float(p, q, ell).value, delta_tau_float(p, q, ell).value};
    if (!(std::abs(row.delta.to_double() - row.delta_float) <= tolerance) ||
        !(std::abs(static_cast<double>(row.delta_tau) - row.delta_tau_float) <= tolerance)) {
        std::ostringstream os;
        os << "sums: exact/float disagreement at (" << p << "," << q << "," << ell << ")";
        throw ConsistencyError(os.str());
    }
    return row;
}

FloerRow eval_floer(const SweepKey& key, double tolerance)
{
    const FloerReport r =
        floer_report(BrieskornSphere::make(key[0], key[1]), Execution::serial, 1, tolerance);
    return {key,         key[0],      key[1], static_cast<std::int64_t>(r.records.size()),
            r.instanton, r.signature, r.ic_natural};
}

namespace {

template <class Row, class Eval>
std::vector<Row> run(std::vector<SweepKey> keys, const SweepOptions& opt, Eval eval)
{
    if (opt.skip) {
        std::erase_if(keys, [&](const SweepKey& k) { return opt.skip->count(k) > 0; });
    }
    std::vector<std::optional<Row>> slots(keys.size());
    for_each_index(keys.size(), opt.exec, opt.jobs,
                   [&](std::size_t i) { slots[i].emplace(eval(keys[i], opt.tolerance)); });
    std::vector<Row> rows;
    rows.reserve(slots.size());
    for (auto& s : slots)
        rows.push_back(std::move(*s));
    return rows;
}

} // namespace

std::vector<LensRow> sweep_lens(const IntRange& p, const IntRange& q, const SweepOptions& opt)
{
    return run<LensRow>(lens_keys(p, q), opt, eval_lens);
}

std::vector<SumsRow> sweep_sums(const IntRange& p, const IntRange& q, const SweepOptions& opt)
{
    return run<SumsRow>(sums_keys(p, q), opt, eval_sums);
}

std::vector<FloerRow> sweep_floer(const IntRange& p, const IntRange& q, const SweepOptions& opt)
{
    return run<FloerRow>(floer_keys(p, q), opt, eval_floer);
}

} // namespace rholat
