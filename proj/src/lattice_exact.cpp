#include "rholat/lattice_exact.hpp"

#include <numeric>
#include <string>

#include "rholat/errors.hpp"
#include "rholat/exact_arith.hpp"

namespace rholat {

namespace {

std::string triple(std::int64_t p, std::int64_t q, std::int64_t ell)
{
    return "(" + std::to_string(p) + ", " + std::to_string(q) + ", " + std::to_string(ell) + ")";
}

struct Prepared {
    std::int64_t p, q, ell, q_inv, J;
};

Prepared prepare(std::int64_t p, std::int64_t q, std::int64_t ell)
{
    require(p >= 2, "parallelogram: p must be >= 2 " + triple(p, q, ell));
    require(ell % 2 == 0, "parallelogram: l must be even " + triple(p, q, ell));
    require(mod_floor(ell, p) != 0, "parallelogram: l = 0 mod p " + triple(p, q, ell));
    Prepared r;
    r.p = p;
    r.q = mod_floor(q, p);
    require(std::gcd(r.q, p) == 1, "parallelogram: gcd(p,q) != 1 " + triple(p, q, ell));
    r.ell = normalize_ell(p, ell);
    r.q_inv = mod_inverse(r.q, p);
    r.J = r.q_inv * r.ell - 1;
    return r;
}

// Points j in [1, J] with j = r (mod p), r in [0, p-1]: count and
// sum of (-1)^j.
struct Progression {
    std::int64_t count;
    std::int64_t signed_count;
};

Progression progression(std::int64_t r, std::int64_t p, std::int64_t J)
{
    const std::int64_t first = r == 0 ? p : r;
    if (first > J)
        return {0, 0};
    const std::int64_t n = (J - first) / p + 1;
    std::int64_t s;
    if (p % 2 == 0)
        s = (first % 2 == 0) ? n : -n;
    else
        s = (n % 2 == 0) ? 0 : ((first % 2 == 0) ? 1 : -1);
    return {n, s};
}

void require_odd(std::int64_t p, const char* who)
{
    require(p >= 3 && p % 2 == 1, std::string(who) + ": p must be odd >= 3, got " + std::to_string(p));
}

} // namespace

std::int64_t normalize_ell(std::int64_t p, std::int64_t ell)
{
    std::int64_t r = mod_floor(ell, p);
    if (p % 2 == 1 && r % 2 == 1)
        r = p - r;
    return r;
}

ParallelogramCount count_parallelogram(std::int64_t p, std::int64_t q, std::int64_t ell)
{
    const Prepared in = prepare(p, q, ell);
    ParallelogramCount c;
    c.p = in.p;
    c.q = in.q;
    c.ell = in.ell;
    c.q_inverse = in.q_inv;

    for (std::int64_t i = 1; i < in.ell; ++i) {
        const Progression g = progression(in.q_inv * i % in.p, in.p, in.J);
        c.interior += g.count;
        c.signed_interior += g.signed_count;
    }
    const Progression on_ell = progression(in.q_inv * in.ell % in.p, in.p, in.J);
    c.on_ell_line = on_ell.count;
    c.signed_ell = on_ell.signed_count;
    const Progression axis = progression(0, in.p, in.J);
    c.on_axis = axis.count;
    c.signed_axis = axis.signed_count;
    return c;
}

ParallelogramCount count_parallelogram_scan(std::int64_t p, std::int64_t q, std::int64_t ell)
{
    const Prepared in = prepare(p, q, ell);
    ParallelogramCount c;
    c.p = in.p;
    c.q = in.q;
    c.ell = in.ell;
    c.q_inverse = in.q_inv;

    for (std::int64_t j = 1; j <= in.J; ++j) {
        const std::int64_t r = in.q * j % in.p;
        const std::int64_t sign = (j % 2 == 0) ? 1 : -1;
        if (r >= 1 && r <= in.ell - 1) {
            ++c.interior;
            c.signed_interior += sign;
        }
        if (r == in.ell) {
            ++c.on_ell_line;
            c.signed_ell += sign;
        }
        if (r == 0) {
            ++c.on_axis;
            c.signed_axis += sign;
        }
    }
    return c;
}

std::int64_t delta_tau_exact(std::int64_t p, std::int64_t q, std::int64_t ell)
{
    require_odd(p, "delta_tau_exact");
    const ParallelogramCount c = count_parallelogram(p, q, ell);
    const std::int64_t v = c.signed_total() + 1;
    if (v % 2 == 0)
        throw ConsistencyError("delta_tau_exact: even value " + std::to_string(v) + " at " +
                               triple(p, q, ell));
    return v;
}

Rational delta_exact(std::int64_t p, std::int64_t q, std::int64_t ell)
{
    require_odd(p, "delta_exact");
    const ParallelogramCount c = count_parallelogram(p, q, ell);
    const BigInt l = static_cast<long>(c.ell);
    const Rational area(BigInt(-2 * c.q_inverse) * l * l, BigInt(static_cast<long>(p)));
    return area + Rational(c.unsigned_total() + 1);
}

Rational dedekind_D_exact(std::int64_t p, std::int64_t b)
{
    require_odd(p, "dedekind_D_exact");
    const std::int64_t br = mod_floor(b, p);
    require(std::gcd(br, p) == 1,
            "dedekind_D_exact: gcd(" + std::to_string(b) + ", " + std::to_string(p) + ") != 1");
    // tan x = cot x - 2 cot 2x turns the shifted sum into classical ones.
    return Rational(16) * dedekind_sum(2 * br, p) - Rational(8) * dedekind_sum(br, p);
}

DieterSequences dieter_sequences(std::int64_t p, std::int64_t b)
{
    require(0 < b && b < p, "dieter_sequences: need 0 < b < p");
    require(std::gcd(b, p) == 1, "dieter_sequences: gcd(b,p) != 1");
    DieterSequences d;
    d.a = {p, b};
    d.x = {Rational(0), Rational(1, 2)};
    std::int64_t s_prev2 = 0, s_prev = 1;
    while (d.a.back() != 0) {
        const std::size_t i = d.a.size() - 1;
        const std::int64_t qi = d.a[i - 1] / d.a[i];
        d.q.push_back(qi);
        const std::int64_t si = s_prev * qi + s_prev2;
        d.s.push_back(si);
        s_prev2 = s_prev;
        s_prev = si;
        d.a.push_back(d.a[i - 1] - d.a[i] * qi);
        d.x.push_back(d.x[i - 1] - d.x[i] * Rational(qi));
    }
    return d;
}

int bracket_indicator(std::int64_t x, std::int64_t y, std::int64_t z)
{
    require(x >= 2, "bracket_indicator: x must be >= 2");
    const std::int64_t y_inv = mod_inverse(y, x);
    // z = m y (mod x)  <=>  m = y* z (mod x)
    const std::int64_t m = mod_floor(z, x) * y_inv % x;
    return (m >= 1 && m <= y_inv - 1) ? 1 : 0;
}

int lawson_N_mod4(std::int64_t q, std::int64_t twob, std::int64_t ell)
{
    require(ell % 2 == 0 && ell > 0, "lawson_N_mod4: l must be a positive even integer");
    std::int64_t hits = 0;
    for (std::int64_t k = 1; k < ell; ++k)
        hits += bracket_indicator(q, twob, k + 1);
    return static_cast<int>(mod_floor(-1 - 2 * hits, 4));
}

} // namespace rholat
