#include "rholat/exact_arith.hpp"

#include <numeric>
#include <string>

#include "rholat/errors.hpp"

namespace rholat {

GcdResult extended_gcd(std::int64_t a, std::int64_t b)
{
    require(a != 0 || b != 0, "extended_gcd: both arguments are zero");
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    require(m >= 2, "mod_inverse: modulus must be >= 2, got " + std::to_string(m));
    const std::int64_t ar = mod_floor(a, m);
    const GcdResult r = extended_gcd(ar, m);
    require(r.g == 1, "mod_inverse: gcd(" + std::to_string(a) + ", " + std::to_string(m) +
                          ") = " + std::to_string(r.g));
    return mod_floor(r.x, m);
}

Rational dedekind_sum(std::int64_t b, std::int64_t p)
{
    require(p >= 1, "dedekind_sum: p must be >= 1");
    b = mod_floor(b, p);
    require(std::gcd(b, p) == 1, "dedekind_sum: gcd(" + std::to_string(b) + ", " +
                                     std::to_string(p) + ") != 1");

    // s(b,p) = R(b,p) - s(p mod b, b), terminating at s(0,1) = 0.
    const Rational quarter(1, 4);
    Rational acc;
    int sign = 1;
    while (p > 1) {
        const BigInt bb = static_cast<long>(b);
        const BigInt pp = static_cast<long>(p);
        Rational term = Rational(bb * bb + pp * pp + 1, 12 * bb * pp) - quarter;
        if (sign > 0)
            acc += term;
        else
            acc -= term;
        sign = -sign;
        const std::int64_t next_b = p % b;
        p = b;
        b = next_b;
    }
    return acc;
}

} // namespace rholat
