#include "rholat/lens_rho.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "rholat/errors.hpp"
#include "rholat/exact_arith.hpp"
#include "rholat/lattice_exact.hpp"

namespace rholat {

LensSpace LensSpace::make(std::int64_t p, std::int64_t q)
{
    require(p >= 2, "lens space: p must be >= 2, got " + std::to_string(p));
    const std::int64_t qr = mod_floor(q, p);
    require(qr != 0 && std::gcd(qr, p) == 1,
            "lens space: gcd(p, q) != 1 for L(" + std::to_string(p) + "," + std::to_string(q) + ")");
    return {p, qr};
}

U1Rep U1Rep::make(const LensSpace& space, std::int64_t ell)
{
    return {mod_floor(ell, space.p)};
}

FloatSumResult rho_lens_float(const LensSpace& space, const U1Rep& rep, Involution inv)
{
    FloatSumResult r;
    if (inv == Involution::A)
        return r;
    const std::int64_t p = space.p, q = space.q, ell = rep.ell;
    CompensatedSum acc;
    for (std::int64_t k = 1; k < p; ++k) {
        const std::int64_t qk = q * k % p;
        double term;
        if (inv == Involution::Bprime) {
            if (2 * k == p) {
                ++r.skipped;
                continue;
            }
            term = tan_pi_frac(k, p) * cot_pi_frac(qk, p);
        } else {
            if (2 * qk == p) {
                ++r.skipped;
                continue;
            }
            term = cot_pi_frac(k, p) * tan_pi_frac(qk, p);
        }
        acc.add(term * sin2_pi_frac(k * ell % p, p));
        ++r.terms;
    }
    r.value = -2.0 * acc.value() / static_cast<double>(p);
    return r;
}

std::optional<Rational> rho_lens_exact(const LensSpace& space, const U1Rep& rep, Involution inv)
{
    if (inv == Involution::A || rep.ell == 0)
        return Rational(0);
    const std::int64_t p = space.p;
    if (p % 2 == 0)
        return std::nullopt;
    if (inv == Involution::B)
        return Rational(delta_tau_exact(p, space.q, normalize_ell(p, rep.ell)));
    const std::int64_t q_inv = mod_inverse(space.q, p);
    return Rational(delta_tau_exact(p, q_inv, normalize_ell(p, q_inv * rep.ell)));
}

LensRho rho_lens(const LensSpace& space, const U1Rep& rep, Involution inv, double tolerance)
{
    LensRho out;
    out.numeric = rho_lens_float(space, rep, inv);
    out.exact = rho_lens_exact(space, rep, inv);
    if (out.exact) {
        const double diff = std::abs(out.numeric.value - out.exact->to_double());
        if (!(diff <= tolerance)) {
            std::ostringstream os;
            os << "rho_lens: exact " << *out.exact << " vs float " << out.numeric.value
               << " for L(" << space.p << "," << space.q << "), l=" << rep.ell << ", "
               << to_string(inv);
            throw ConsistencyError(os.str());
        }
    }
    return out;
}

} // namespace rholat
