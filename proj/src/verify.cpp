#include "rholat/verify.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "rholat/brieskorn.hpp"
#include "rholat/exact_arith.hpp"
#include "rholat/floer.hpp"
#include "rholat/lattice_exact.hpp"
#include "rholat/lens_rho.hpp"

namespace rholat {

namespace {

using Tuple = std::vector<std::int64_t>;
using Probe = std::function<std::optional<std::string>(const Tuple&)>;

std::string show(const Tuple& t)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

CheckResult run_check(std::string name, const std::vector<Tuple>& cases, const Probe& probe,
                      const VerifyOptions& opt)
{
    std::vector<std::optional<std::string>> outcome(cases.size());
    for_each_index(cases.size(), opt.exec, opt.jobs, [&](std::size_t i) {
        try {
            outcome[i] = probe(cases[i]);
        } catch (const std::exception& e) {
            outcome[i] = std::string("exception: ") + e.what();
        }
    });
    CheckResult r{std::move(name), static_cast<std::int64_t>(cases.size()), 0, {}};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (!outcome[i])
            continue;
        if (r.failures++ == 0)
            r.counterexample = show(cases[i]) + ": " + *outcome[i];
    }
    return r;
}

bool close(double a, double b, double tol)
{
    return std::abs(a - b) <= tol;
}

std::string mismatch(const std::string& what, double a, double b)
{
    std::ostringstream os;
    os.precision(17);
    os << what << " " << a << " vs " << b;
    return os.str();
}

// (p, q, l): odd p, coprime q in [1,p-1], even l in [2, p-1]
std::vector<Tuple> odd_lattice_cases(std::int64_t max_p)
{
    std::vector<Tuple> out;
    for (std::int64_t p = 3; p <= max_p; p += 2)
        for (std::int64_t q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1)
                for (std::int64_t l = 2; l < p; l += 2)
                    out.push_back({p, q, l});
    return out;
}

// (p, q, l, inv): any p >= 2, coprime q, every l; inv 1 = B, 2 = Bprime
std::vector<Tuple> lens_cases(std::int64_t max_p)
{
    std::vector<Tuple> out;
    for (std::int64_t p = 2; p <= max_p; ++p)
        for (std::int64_t q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1)
                for (std::int64_t l = 0; l < p; ++l)
                    for (std::int64_t inv = 1; inv <= 2; ++inv)
                        out.push_back({p, q, l, inv});
    return out;
}

std::vector<Tuple> sphere_cases(std::int64_t max_p)
{
    std::vector<Tuple> out;
    for (std::int64_t p = 3; p <= max_p; p += 2)
        for (std::int64_t q = p + 2; q <= max_p; q += 2)
            if (std::gcd(p, q) == 1)
                out.push_back({p, q});
    return out;
}

double direct_dedekind(std::int64_t b, std::int64_t p)
{
    auto saw = [](std::int64_t n, std::int64_t d) {
        const std::int64_t r = mod_floor(n, d);
        return r == 0 ? 0.0 : static_cast<double>(r) / static_cast<double>(d) - 0.5;
    };
    CompensatedSum acc;
    for (std::int64_t k = 1; k < p; ++k)
        acc.add(saw(k, p) * saw(k * b, p));
    return acc.value();
}

Involution inv_of(std::int64_t i)
{
    return i == 1 ? Involution::B : Involution::Bprime;
}

std::optional<std::string> regression(const Tuple&)
{
    if (delta_exact(3, 2, 2) != Rational(-1, 3))
        return "delta(3;2,2) != -1/3";
    if (delta_tau_exact(3, 2, 2) != 1)
        return "delta_tau(3;2,2) != 1";
    if (dedekind_D_exact(3, 2) != Rational(4, 3))
        return "D(3;2) != 4/3";
    for (std::int64_t n = 1; n <= 20; ++n)
        if (dedekind_D_exact(6 * n + 1, 5 * n + 1) !=
            Rational(2) * (Rational(n - 1) + Rational(5 * n + 1, 6 * n + 1)))
            return "D(6n+1;5n+1) closed form fails at n=" + std::to_string(n);

    const FloerReport r = floer_report(BrieskornSphere::make(3, 7));
    if (r.records.size() != 2 || r.records[0].rot != RotationNumbers{2, 2} ||
        r.records[1].rot != RotationNumbers{2, 4})
        return "Sigma(2,3,7) representations";
    if (r.records[0].gr_mod8 != 7 || r.records[1].gr_mod8 != 3)
        return "Sigma(2,3,7) gradings mod 8";
    if (r.records[0].mu != 87 || r.records[1].mu != 125)
        return "Sigma(2,3,7) mu values";
    if (r.ic_natural != GradedRanks<4>{{3, 2, 2, 2}})
        return "IC(T(3,7))";
    for (std::int64_t n = 1; n <= 5; ++n) {
        const FloerReport f = floer_report(BrieskornSphere::make(3, 6 * n + 1));
        if (static_cast<std::int64_t>(f.records.size()) != 2 * n)
            return "Sigma(2,3,6n+1) count at n=" + std::to_string(n);
        if (f.ic_natural != GradedRanks<4>{{2 * n + 1, 2 * n, 2 * n, 2 * n}})
            return "IC(T(3,6n+1)) at n=" + std::to_string(n);
    }
    return std::nullopt;
}

} // namespace

VerifyReport run_verify(const VerifyOptions& opt)
{
    const double tol = opt.tolerance;
    const auto lattice = odd_lattice_cases(opt.max_p);
    const auto lens = lens_cases(opt.max_p);
    const auto spheres = sphere_cases(opt.max_p);
    VerifyReport report;

    report.checks.push_back(run_check("pinned-regression", {{0}}, regression, opt));

    std::vector<Tuple> ded;
    for (std::int64_t p = 2; p <= std::max<std::int64_t>(opt.max_p, 2); ++p)
        for (std::int64_t b = 1; b < p; ++b)
            if (std::gcd(b, p) == 1)
                ded.push_back({b, p});
    report.checks.push_back(run_check(
        "dedekind-sum-vs-direct", ded,
        [&](const Tuple& t) -> std::optional<std::string> {
            const double exact = dedekind_sum(t[0], t[1]).to_double();
            const double direct = direct_dedekind(t[0], t[1]);
            if (!close(exact, direct, tol))
                return mismatch("s(b,p)", exact, direct);
            return std::nullopt;
        },
        opt));

    report.checks.push_back(run_check(
        "exact-vs-float", lattice,
        [&](const Tuple& t) -> std::optional<std::string> {
            const double d = delta_exact(t[0], t[1], t[2]).to_double();
            const double df = delta_float(t[0], t[1], t[2]).value;
            if (!close(d, df, tol))
                return mismatch("delta", d, df);
            const double dt = static_cast<double>(delta_tau_exact(t[0], t[1], t[2]));
            const double dtf = delta_tau_float(t[0], t[1], t[2]).value;
            if (!close(dt, dtf, tol))
                return mismatch("delta_tau", dt, dtf);
            if (t[2] == 2) {
                const double D = dedekind_D_exact(t[0], t[1]).to_double();
                const double Df = dedekind_D_float(t[0], t[1]).value;
                if (!close(D, Df, tol))
                    return mismatch("D", D, Df);
            }
            return std::nullopt;
        },
        opt));

    report.checks.push_back(run_check(
        "oddness", lattice,
        [&](const Tuple& t) -> std::optional<std::string> {
            const std::int64_t v = delta_tau_exact(t[0], t[1], t[2]);
            if (v % 2 == 0)
                return "delta_tau = " + std::to_string(v) + " is even";
            return std::nullopt;
        },
        opt));

    report.checks.push_back(run_check(
        "doubling-identity", lattice,
        [&](const Tuple& t) -> std::optional<std::string> {
            const std::int64_t p = t[0], q = t[1], l = t[2];
            const Rational lhs = Rational(delta_tau_exact(p, q, l)) + delta_exact(p, q, l);
            const Rational rhs = Rational(2) * delta_exact(p, 2 * q % p, l);
            if (lhs != rhs)
                return "delta_tau + delta = " + lhs.to_string() + " but 2 delta(p;2q,l) = " +
                       rhs.to_string();
            return std::nullopt;
        },
        opt));

    report.checks.push_back(run_check(
        "defect-route", lens,
        [&](const Tuple& t) -> std::optional<std::string> {
            const LensSpace space = LensSpace::make(t[0], t[1]);
            const U1Rep rep = U1Rep::make(space, t[2]);
            const double closed = rho_lens_float(space, rep, inv_of(t[3])).value;
            const double defects = rho_via_defects(t[0], t[1], t[2], inv_of(t[3])).value;
            if (!close(closed, defects, tol))
                return mismatch("closed form vs defects", closed, defects);
            return std::nullopt;
        },
        opt));

    report.checks.push_back(run_check(
        "lens-exact-vs-float", lens,
        [&](const Tuple& t) -> std::optional<std::string> {
            const LensSpace space = LensSpace::make(t[0], t[1]);
            const U1Rep rep = U1Rep::make(space, t[2]);
            const auto exact = rho_lens_exact(space, rep, inv_of(t[3]));
            if (!exact)
                return std::nullopt;
            const double f = rho_lens_float(space, rep, inv_of(t[3])).value;
            if (!close(exact->to_double(), f, tol))
                return mismatch("rho exact vs float", exact->to_double(), f);
            if (rep.ell != 0 && exact->is_integer() && mod_floor(exact->num(), 2) == 0)
                return "rho = " + exact->to_string() + " is not odd";
            return std::nullopt;
        },
        opt));

    report.checks.push_back(run_check(
        "parity-integrality", spheres,
        [&](const Tuple& t) -> std::optional<std::string> {
            const FloerReport r =
                floer_report(BrieskornSphere::make(t[0], t[1]), Execution::serial, 1, tol);
            for (const auto& rec : r.records)
                if (mod_floor(rec.mu - rec.gr, 2) != 0)
                    return "mu - gr odd at l = (" + std::to_string(rec.rot.l2) + "," +
                           std::to_string(rec.rot.l3) + ")";
            if (r.signature_mod4 != 0)
                return "signature " + std::to_string(r.signature) + " != 0 mod 4";
            if (r.ic_natural.total() != 4 * static_cast<std::int64_t>(r.records.size()) + 1)
                return "IC total rank law";
            return std::nullopt;
        },
        opt));

    report.checks.push_back(run_check(
        "seifert-invariance", spheres,
        [&](const Tuple& t) -> std::optional<std::string> {
            const BrieskornSphere s = BrieskornSphere::make(t[0], t[1]);
            const SeifertData base = solve_seifert(s);
            for (const auto& rot : enumerate_reps(s)) {
                const FloerRecord a = floer_record(s, base, rot, tol);
                for (std::int64_t m : {-1, 1, 2}) {
                    const FloerRecord b = floer_record(s, base.shifted(s, m), rot, tol);
                    if (!a.same_invariants(b))
                        return "records differ under shift m=" + std::to_string(m);
                }
            }
            return std::nullopt;
        },
        opt));

    return report;
}

} // namespace rholat
