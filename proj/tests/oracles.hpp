#pragma once

// Independent reference implementations used only by the tests. None of
// these call into the library's evaluation routes.

#include <cmath>
#include <cstdint>
#include <numbers>

#include <Eigen/Dense>

#include "rholat/rational.hpp"

namespace oracle {

inline std::int64_t brute_inverse(std::int64_t a, std::int64_t m)
{
    a = ((a % m) + m) % m;
    for (std::int64_t x = 1; x < m; ++x)
        if (a * x % m == 1)
            return x;
    return 0;
}

/// ((x)) for x = n/d: 0 at integers, else frac(x) - 1/2.
inline rholat::Rational sawtooth(std::int64_t n, std::int64_t d)
{
    const std::int64_t r = ((n % d) + d) % d;
    if (r == 0)
        return rholat::Rational(0);
    return rholat::Rational(r, d) - rholat::Rational(1, 2);
}

/// s(b,p) = sum_{k=1}^{p-1} ((k/p)) ((bk/p)), exactly.
inline rholat::Rational dedekind_direct(std::int64_t b, std::int64_t p)
{
    rholat::Rational s(0);
    for (std::int64_t k = 1; k < p; ++k)
        s += sawtooth(k, p) * sawtooth(b * k, p);
    return s;
}

/// Same sum in long double.
inline long double dedekind_direct_ld(std::int64_t b, std::int64_t p)
{
    auto saw = [](std::int64_t n, std::int64_t d) -> long double {
        const std::int64_t r = ((n % d) + d) % d;
        return r == 0 ? 0.0L : static_cast<long double>(r) / d - 0.5L;
    };
    long double s = 0;
    for (std::int64_t k = 1; k < p; ++k)
        s += saw(k, p) * saw(b * k, p);
    return s;
}

inline constexpr long double kPi = std::numbers::pi_v<long double>;

/// Cotangent sums in long double, directly from the defining formulas.
/// cot(x + pi/2) = -tan(x); for even p the singular tan terms are dropped.
inline long double delta_ld(std::int64_t p, std::int64_t q, std::int64_t ell)
{
    long double s = 0;
    for (std::int64_t k = 1; k < p; ++k) {
        const long double sn = std::sin(kPi * k * ell / p);
        s += (1.0L / std::tan(kPi * k / p)) * (1.0L / std::tan(kPi * q * k / p)) * sn * sn;
    }
    return 2.0L * s / p;
}

inline long double delta_tau_ld(std::int64_t p, std::int64_t q, std::int64_t ell)
{
    long double s = 0;
    for (std::int64_t k = 1; k < p; ++k) {
        if ((2 * q * k) % p == 0)
            continue;
        const long double sn = std::sin(kPi * k * ell / p);
        s += -(1.0L / std::tan(kPi * k / p)) * std::tan(kPi * q * k / p) * sn * sn;
    }
    return 2.0L * s / p;
}

struct Counts {
    std::int64_t interior = 0, on_ell = 0, on_axis = 0;
    std::int64_t s_interior = 0, s_ell = 0, s_axis = 0;
};

/// Double loop over the (i, j) lattice, 0 <= i <= l, 1 <= j <= q* l - 1,
/// testing q j = i (mod p) point by point.
inline Counts brute_counts(std::int64_t p, std::int64_t q, std::int64_t ell)
{
    const std::int64_t qs = brute_inverse(q, p);
    const std::int64_t J = qs * ell - 1;
    Counts c;
    for (std::int64_t i = 0; i <= ell; ++i)
        for (std::int64_t j = 1; j <= J; ++j) {
            if (((q * j - i) % p + p) % p != 0)
                continue;
            const std::int64_t sg = j % 2 == 0 ? 1 : -1;
            if (i == 0) {
                ++c.on_axis;
                c.s_axis += sg;
            } else if (i == ell) {
                ++c.on_ell;
                c.s_ell += sg;
            } else {
                ++c.interior;
                c.s_interior += sg;
            }
        }
    return c;
}

/// Signature of T(p,q) from a Seifert matrix V = -(L_p (x) L_q), L_n the
/// (n-1)x(n-1) matrix with 1 on the diagonal and -1 above it.
inline std::int64_t torus_signature_seifert(int p, int q)
{
    auto L = [](int n) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n - 1, n - 1);
        for (int i = 0; i < n - 1; ++i) {
            m(i, i) = 1;
            if (i + 1 < n - 1)
                m(i, i + 1) = -1;
        }
        return m;
    };
    const Eigen::MatrixXd a = L(p), b = L(q);
    Eigen::MatrixXd V(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            V.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = -a(i, j) * b;
    const Eigen::MatrixXd S = V + V.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    std::int64_t sig = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const double ev = es.eigenvalues()(i);
        sig += ev > 1e-9 ? 1 : (ev < -1e-9 ? -1 : 0);
    }
    return sig;
}

/// Pair count over 1 <= a < p, 1 <= b < q: -1 inside (1/2, 3/2), +1 outside.
inline std::int64_t torus_signature_pairs(std::int64_t p, std::int64_t q)
{
    std::int64_t sig = 0;
    for (std::int64_t a = 1; a < p; ++a)
        for (std::int64_t b = 1; b < q; ++b) {
            const std::int64_t t = 2 * (a * q + b * p);
            sig += (t > p * q && t < 3 * p * q) ? -1 : 1;
        }
    return sig;
}

} // namespace oracle
