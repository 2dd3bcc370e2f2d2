#pragma once

/**
 * @file cotan_float.hpp
 * @brief Double-precision evaluation of the cotangent sums.
 *
 * These are the direct O(p) trigonometric sums. They serve as the numerical
 * oracle for the exact lattice and reciprocity routes in lattice_exact.hpp.
 * Arguments of cot/tan/sin are reduced with integer arithmetic before they
 * are scaled by pi, and every sum is accumulated in ascending k with
 * Neumaier compensation.
 *
 * Singular summands (possible only for even p) are detected with integer
 * predicates and omitted; `skipped` reports how many.
 */

#include <cstdint>

#include "rholat/involution.hpp"

namespace rholat {

inline constexpr double kDefaultTolerance = 1e-8;

struct FloatSumResult {
    double value = 0.0;
    std::int64_t terms = 0;   ///< summands included
    std::int64_t skipped = 0; ///< singular summands omitted
};

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// cot(pi n / d), tan(pi n / d), sin^2(pi n / d) for integers n, d > 0.
// cot is singular at n = 0 mod d, tan at 2n = d mod 2d.
double cot_pi_frac(std::int64_t n, std::int64_t d);
double tan_pi_frac(std::int64_t n, std::int64_t d);
double sin2_pi_frac(std::int64_t n, std::int64_t d);

/// Casson-Gordon sum (2/p) sum cot(pi k/p) cot(pi q k/p) sin^2(pi k l/p).
FloatSumResult delta_float(std::int64_t p, std::int64_t q, std::int64_t ell);

/// Half-period shifted sum (2/p) sum cot(pi k/p) cot(pi q k/p + pi/2) sin^2(pi k l/p).
FloatSumResult delta_tau_float(std::int64_t p, std::int64_t q, std::int64_t ell);

/// D(p;b) = (2/p) sum cot(pi k/p) cot(pi b k/p + pi/2).
FloatSumResult dedekind_D_float(std::int64_t p, std::int64_t b);

/**
 * eta(tau, L(n,b)) = -(1/n) sum_{k=1}^{n-1} cot(pi k/n) cot(pi b k/n + pi/2).
 *
 * The prefactor is the modulus of the sum itself (1/q for L(q,b3)). The
 * direct sum is checked against -D(n;b)/2; disagreement throws
 * ConsistencyError.
 */
FloatSumResult eta_lens_float(std::int64_t n, std::int64_t b);

/**
 * rho_alpha(tau, L(p,q)) assembled from the signature defects of the lifts
 * tau~ g^k acting on S^3:
 *
 *   rho = (1/p) sum_{k=1}^{p-1} eta(tau~ g^k, S^3) (exp(2 pi i k l/p) - 1),
 *   eta = -cot(pi a/2p) cot(pi b/2p)
 *
 * with rotation numbers (a, b) = (p+2k, 2kq) for Bprime and (2k, p+2qk) for B,
 * taken mod 2p. A fixed 2-disk (a or b = 0 mod 2p, even p only) contributes
 * nothing. The imaginary part is checked to vanish (|im| <= 1e-9 times the
 * scale of the summands) and then discarded; otherwise ConsistencyError.
 * Involution::A is not a defect-route input and throws DomainError.
 */
FloatSumResult rho_via_defects(std::int64_t p, std::int64_t q, std::int64_t ell, Involution inv);

} // namespace rholat
