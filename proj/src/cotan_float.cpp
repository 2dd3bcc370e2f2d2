#include "rholat/cotan_float.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>

#include "rholat/errors.hpp"
#include "rholat/rational.hpp"

namespace rholat {

namespace {

void require_coprime(std::int64_t p, std::int64_t q, const char* who)
{
    require(p >= 2, std::string(who) + ": modulus must be >= 2, got " + std::to_string(p));
    require(std::gcd(mod_floor(q, p), p) == 1,
            std::string(who) + ": gcd(" + std::to_string(q) + ", " + std::to_string(p) + ") != 1");
}

} // namespace

double cot_pi_frac(std::int64_t n, std::int64_t d)
{
    std::int64_t m = mod_floor(n, d);
    if (2 * m == d)
        return 0.0;
    double sign = 1.0;
    if (2 * m > d) {
        m = d - m;
        sign = -1.0;
    }
    const double x = std::numbers::pi * static_cast<double>(m) / static_cast<double>(d);
    return sign * std::cos(x) / std::sin(x);
}

double tan_pi_frac(std::int64_t n, std::int64_t d)
{
    // tan(pi n/d) = cot(pi (d - 2n) / 2d)
    return cot_pi_frac(d - 2 * mod_floor(n, d), 2 * d);
}

double sin2_pi_frac(std::int64_t n, std::int64_t d)
{
    std::int64_t m = mod_floor(n, d);
    if (2 * m > d)
        m = d - m;
    const double s = std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(d));
    return s * s;
}

FloatSumResult delta_float(std::int64_t p, std::int64_t q, std::int64_t ell)
{
    require_coprime(p, q, "delta_float");
    q = mod_floor(q, p);
    ell = mod_floor(ell, p);
    CompensatedSum acc;
    FloatSumResult r;
    for (std::int64_t k = 1; k < p; ++k) {
        acc.add(cot_pi_frac(k, p) * cot_pi_frac(q * k % p, p) * sin2_pi_frac(k * ell % p, p));
        ++r.terms;
    }
    r.value = 2.0 * acc.value() / static_cast<double>(p);
    return r;
}

FloatSumResult delta_tau_float(std::int64_t p, std::int64_t q, std::int64_t ell)
{
    require_coprime(p, q, "delta_tau_float");
    q = mod_floor(q, p);
    ell = mod_floor(ell, p);
    CompensatedSum acc;
    FloatSumResult r;
    for (std::int64_t k = 1; k < p; ++k) {
        const std::int64_t qk = q * k % p;
        if (2 * qk == p) {
            ++r.skipped;
            continue;
        }
        // cot(x + pi/2) = -tan(x)
        acc.add(-cot_pi_frac(k, p) * tan_pi_frac(qk, p) * sin2_pi_frac(k * ell % p, p));
        ++r.terms;
    }
    r.value = 2.0 * acc.value() / static_cast<double>(p);
    return r;
}

FloatSumResult dedekind_D_float(std::int64_t p, std::int64_t b)
{
    require_coprime(p, b, "dedekind_D_float");
    b = mod_floor(b, p);
    CompensatedSum acc;
    FloatSumResult r;
    for (std::int64_t k = 1; k < p; ++k) {
        const std::int64_t bk = b * k % p;
        if (2 * bk == p) {
            ++r.skipped;
            continue;
        }
        acc.add(-cot_pi_frac(k, p) * tan_pi_frac(bk, p));
        ++r.terms;
    }
    r.value = 2.0 * acc.value() / static_cast<double>(p);
    return r;
}

FloatSumResult eta_lens_float(std::int64_t n, std::int64_t b)
{
    require_coprime(n, b, "eta_lens_float");
    b = mod_floor(b, n);
    const double pi = std::numbers::pi;
    CompensatedSum acc;
    FloatSumResult r;
    for (std::int64_t k = 1; k < n; ++k) {
        const std::int64_t bk = b * k % n;
        if (2 * bk == n) {
            ++r.skipped;
            continue;
        }
        // Written literally with the pi/2 shift; the D route uses -tan.
        const double shifted = pi * static_cast<double>(bk) / static_cast<double>(n) + pi / 2;
        acc.add(cot_pi_frac(k, n) * std::cos(shifted) / std::sin(shifted));
        ++r.terms;
    }
    r.value = -acc.value() / static_cast<double>(n);

    const double via_d = -0.5 * dedekind_D_float(n, b).value;
    if (std::abs(r.value - via_d) > 1e-9 * std::max(1.0, std::abs(via_d)))
        throw ConsistencyError("eta_lens_float: direct sum " + std::to_string(r.value) +
                               " disagrees with -D/2 = " + std::to_string(via_d));
    return r;
}

FloatSumResult rho_via_defects(std::int64_t p, std::int64_t q, std::int64_t ell, Involution inv)
{
    require(inv != Involution::A, "rho_via_defects: defect route is defined for B and Bprime only");
    require_coprime(p, q, "rho_via_defects");
    q = mod_floor(q, p);
    ell = mod_floor(ell, p);
    const std::int64_t two_p = 2 * p;

    CompensatedSum re, im;
    double scale = 0.0;
    FloatSumResult r;
    for (std::int64_t k = 1; k < p; ++k) {
        std::int64_t a, b;
        if (inv == Involution::Bprime) {
            a = (p + 2 * k) % two_p;
            b = (2 * k * q) % two_p;
        } else {
            a = (2 * k) % two_p;
            b = (p + 2 * q * k) % two_p;
        }
        if (a == 0 || b == 0) {
            ++r.skipped;
            continue;
        }
        const double defect = -cot_pi_frac(a, two_p) * cot_pi_frac(b, two_p);
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(k * ell % p) / static_cast<double>(p);
        const std::complex<double> weight = std::polar(1.0, angle) - 1.0;
        re.add(defect * weight.real());
        im.add(defect * weight.imag());
        scale += std::abs(defect);
        ++r.terms;
    }
    const double pd = static_cast<double>(p);
    const double imag = im.value() / pd;
    if (std::abs(imag) > 1e-9 * std::max(1.0, scale / pd))
        throw ConsistencyError("rho_via_defects: imaginary residue " + std::to_string(imag) +
                               " for (p,q,l) = (" + std::to_string(p) + "," + std::to_string(q) +
                               "," + std::to_string(ell) + ")");
    r.value = re.value() / pd;
    return r;
}

} // namespace rholat
