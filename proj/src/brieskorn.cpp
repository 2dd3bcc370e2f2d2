#include "rholat/brieskorn.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "rholat/errors.hpp"
#include "rholat/exact_arith.hpp"
#include "rholat/lattice_exact.hpp"

namespace rholat {

namespace {

std::string describe(const BrieskornSphere& s, const RotationNumbers& rot)
{
    std::ostringstream os;
    os << "Sigma(2," << s.p << "," << s.q << ") rot (1," << rot.l2 << "," << rot.l3 << ")";
    return os.str();
}

int residue(const BigInt& v, int m)
{
    return static_cast<int>(mod_floor(v, m));
}

double cos2_pi_frac(std::int64_t n, std::int64_t d)
{
    const double c = std::cos(std::numbers::pi * static_cast<double>(mod_floor(n, d)) /
                              static_cast<double>(d));
    return c * c;
}

// (4/n) sum_{k=1}^{n-1} cot(pi k/n) tan(pi b k/n) cos^2(pi k l/n)
double adjoint_eta_sum(std::int64_t n, std::int64_t b, std::int64_t ell, FloatSumResult& diag)
{
    b = mod_floor(b, n);
    CompensatedSum acc;
    for (std::int64_t k = 1; k < n; ++k) {
        const std::int64_t bk = b * k % n;
        if (2 * bk == n) {
            ++diag.skipped;
            continue;
        }
        acc.add(cot_pi_frac(k, n) * tan_pi_frac(bk, n) * cos2_pi_frac(k * ell % n, n));
        ++diag.terms;
    }
    return 4.0 * acc.value() / static_cast<double>(n);
}

} // namespace

BrieskornSphere BrieskornSphere::make(std::int64_t p, std::int64_t q)
{
    require(p >= 3 && q >= 3, "Brieskorn sphere: p, q must be >= 3");
    require(p % 2 == 1 && q % 2 == 1, "Brieskorn sphere: p, q must be odd");
    require(std::gcd(p, q) == 1, "Brieskorn sphere: p, q must be coprime");
    return {p, q};
}

bool SeifertData::valid_for(const BrieskornSphere& s) const
{
    if (b2 % 2 != 0 || b3 % 2 != 0)
        return false;
    const BigInt lhs = BigInt(static_cast<long>(s.p * s.q)) * static_cast<long>(b1) +
                       BigInt(static_cast<long>(2 * s.q)) * static_cast<long>(b2) +
                       BigInt(static_cast<long>(2 * s.p)) * static_cast<long>(b3);
    return lhs == 1;
}

SeifertData SeifertData::shifted(const BrieskornSphere& s, std::int64_t m) const
{
    return {b1, b2 + 2 * s.p * m, b3 - 2 * s.q * m};
}

SeifertData solve_seifert(const BrieskornSphere& s)
{
    const std::int64_t p = s.p, q = s.q;
    // 2q b2 = 1 (mod p), 2p b3 = 1 (mod q); shifting by the odd modulus fixes parity.
    std::int64_t b2 = mod_inverse(2 * q, p);
    if (b2 % 2 != 0)
        b2 += p;
    // The even representatives of b3 mod 2q are b3 and b3 - q; both lie in
    // (-q, q), so whichever is even has the least absolute value.
    std::int64_t b3 = mod_inverse(2 * p, q);
    if (b3 % 2 != 0)
        b3 -= q;

    const std::int64_t rest = 1 - 2 * q * b2 - 2 * p * b3;
    if (rest % (p * q) != 0)
        throw ConsistencyError("solve_seifert: no integral b1");
    SeifertData out{rest / (p * q), b2, b3};
    if (!out.valid_for(s))
        throw ConsistencyError("solve_seifert: produced invalid Seifert data");
    return out;
}

bool is_realizable(const BrieskornSphere& s, const RotationNumbers& rot)
{
    const std::int64_t a = s.p * s.q;          // pi/2
    const std::int64_t b = 2 * s.q * rot.l2;   // pi l2 / p
    const std::int64_t c = 2 * s.p * rot.l3;   // pi l3 / q
    return a < b + c && b < a + c && c < a + b && a + b + c < 4 * s.p * s.q;
}

std::vector<RotationNumbers> enumerate_reps(const BrieskornSphere& s)
{
    std::vector<RotationNumbers> out;
    for (std::int64_t l2 = 2; l2 < s.p; l2 += 2)
        for (std::int64_t l3 = 2; l3 < s.q; l3 += 2) {
            const RotationNumbers rot{l2, l3};
            if (is_realizable(s, rot))
                out.push_back(rot);
        }
    return out;
}

std::int64_t rotation_e(const BrieskornSphere& s, const RotationNumbers& rot)
{
    return s.p * s.q * RotationNumbers::l1 + 2 * s.q * rot.l2 + 2 * s.p * rot.l3;
}

Graded fs_grading(const BrieskornSphere& s, const SeifertData& seifert, const RotationNumbers& rot)
{
    const BigInt e = static_cast<long>(rotation_e(s, rot));
    const Rational gr = Rational(e * e, BigInt(static_cast<long>(s.p * s.q))) +
                        delta_exact(s.p, seifert.b2, rot.l2) + delta_exact(s.q, seifert.b3, rot.l3);
    if (!gr.is_integer())
        throw ConsistencyError("fs_grading: non-integral grading " + gr.to_string() + " for " +
                               describe(s, rot));
    return {gr.num(), residue(gr.num(), 8)};
}

FloatSumResult rho_brieskorn_float(const BrieskornSphere& s, const SeifertData& seifert,
                                   const RotationNumbers& rot)
{
    FloatSumResult r;
    const double pq = static_cast<double>(s.p) * static_cast<double>(s.q);
    const double sp = adjoint_eta_sum(s.p, seifert.b2, rot.l2, r);
    const double sq = adjoint_eta_sum(s.q, seifert.b3, rot.l3, r);
    r.value = 1.0 - 2.0 / pq - sp - sq;
    return r;
}

Rational rho_brieskorn(const BrieskornSphere& s, const SeifertData& seifert,
                       const RotationNumbers& rot, double tolerance)
{
    // (4/n) sum cot tan cos^2 = 2 delta_tau(n; b, l) - 2 D(n; b)
    const Rational rho = Rational(1) - Rational(2, s.p * s.q) -
                         Rational(2 * delta_tau_exact(s.p, seifert.b2, rot.l2)) -
                         Rational(2 * delta_tau_exact(s.q, seifert.b3, rot.l3)) +
                         Rational(2) * dedekind_D_exact(s.p, seifert.b2) +
                         Rational(2) * dedekind_D_exact(s.q, seifert.b3);
    const double numeric = rho_brieskorn_float(s, seifert, rot).value;
    if (!(std::abs(numeric - rho.to_double()) <= tolerance)) {
        std::ostringstream os;
        os << "rho_brieskorn: exact " << rho << " vs float " << numeric << " for "
           << describe(s, rot);
        throw ConsistencyError(os.str());
    }
    return rho;
}

Graded mu_grading(const BrieskornSphere& s, const SeifertData& seifert, const RotationNumbers& rot,
                  double tolerance)
{
    const FloerRecord r = floer_record(s, seifert, rot, tolerance);
    return {r.mu, r.mu_mod4};
}

FloerRecord floer_record(const BrieskornSphere& s, const SeifertData& seifert,
                         const RotationNumbers& rot, double tolerance)
{
    require(seifert.valid_for(s), "floer_record: Seifert data does not satisfy pq b1 + 2q b2 + 2p b3 = 1");
    FloerRecord r;
    r.rot = rot;
    r.e = rotation_e(s, rot);
    const Graded gr = fs_grading(s, seifert, rot);
    r.gr = gr.value;
    r.gr_mod8 = gr.residue;
    r.rho = rho_brieskorn(s, seifert, rot, tolerance);
    r.rho_float = rho_brieskorn_float(s, seifert, rot).value;
    const Rational mu = Rational(gr.value, 2) + (Rational(1) - r.rho) / Rational(4);
    if (!mu.is_integer())
        throw ConsistencyError("mu_grading: non-integral mu " + mu.to_string() + " for " +
                               describe(s, rot));
    r.mu = mu.num();
    r.mu_mod4 = residue(r.mu, 4);
    return r;
}

std::int64_t torus_signature(std::int64_t p, std::int64_t q)
{
    require(p >= 2 && q >= 2 && std::gcd(p, q) == 1, "torus_signature: need coprime p, q >= 2");
    // a/p + b/q in (1/2, 3/2)  <=>  pq - 2aq < 2pb < 3pq - 2aq
    std::int64_t negative = 0;
    for (std::int64_t a = 1; a < p; ++a) {
        const std::int64_t lo_num = p * q - 2 * a * q;
        const std::int64_t hi_num = 3 * p * q - 2 * a * q;
        std::int64_t lo = floor_div(lo_num, 2 * p) + 1;      // smallest b with 2pb > lo_num
        std::int64_t hi = -floor_div(-hi_num, 2 * p) - 1;    // largest b with 2pb < hi_num
        lo = std::max<std::int64_t>(lo, 1);
        hi = std::min<std::int64_t>(hi, q - 1);
        if (hi >= lo)
            negative += hi - lo + 1;
    }
    return (p - 1) * (q - 1) - 2 * negative;
}

} // namespace rholat
