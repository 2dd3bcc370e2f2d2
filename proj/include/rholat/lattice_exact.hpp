#pragma once

/**
 * @file lattice_exact.hpp
 * @brief Exact evaluation of the cotangent sums through lattice-point counts.
 *
 * For odd p, q coprime to p, even l with l != 0 mod p and J = q* l - 1
 * (q q* = 1 mod p), the half-period sum is a signed count
 *
 *   delta_tau(p;q,l) = 2 S_int + S_l + S_0 + 1
 *
 * where, over 1 <= j <= J weighted by (-1)^j,
 *   S_int counts pairs (i, j) with 1 <= i <= l-1 and q j = i (mod p),
 *   S_l   counts j with q j = l (mod p),
 *   S_0   counts j with q j = 0 (mod p).
 * The unsigned counts give the Casson-Gordon sum
 *
 *   delta(p;q,l) = -2 q* l^2 / p + (2 N_int + N_l + N_0) + 1.
 *
 * Geometrically these are the points (j, q j/p - i/p) of the parallelogram
 * spanned by the lines phi_i(j) = (q j - i)/p; interior points weigh 2.
 */

#include <cstdint>
#include <vector>

#include "rholat/rational.hpp"

namespace rholat {

struct ParallelogramCount {
    std::int64_t p = 0, q = 0, ell = 0; ///< normalized inputs actually counted
    std::int64_t q_inverse = 0;         ///< q* in [1, p-1]
    std::int64_t interior = 0;
    std::int64_t on_ell_line = 0;
    std::int64_t on_axis = 0;
    std::int64_t signed_interior = 0;
    std::int64_t signed_ell = 0;
    std::int64_t signed_axis = 0;

    std::int64_t unsigned_total() const { return 2 * interior + on_ell_line + on_axis; }
    std::int64_t signed_total() const { return 2 * signed_interior + signed_ell + signed_axis; }

    friend bool operator==(const ParallelogramCount&, const ParallelogramCount&) = default;
};

/// Representative of l mod p used by the exact routes: l mod p, replaced by
/// p - (l mod p) when that residue is odd and p is odd. Both sums depend
/// on l only through sin^2(pi k l / p), so the value is unchanged.
std::int64_t normalize_ell(std::int64_t p, std::int64_t ell);

/**
 * Parallelogram counts in O(l): each residue class j = q* i (mod p) is an
 * arithmetic progression in [1, J] and is counted in closed form.
 *
 * Requires p >= 2, gcd(p,q) = 1, l even, l != 0 mod p. q is reduced mod p
 * and l normalized with normalize_ell.
 */
ParallelogramCount count_parallelogram(std::int64_t p, std::int64_t q, std::int64_t ell);

/// Same counts by scanning j = 1..J and classifying q j mod p; O(q* l).
/// Kept as the serial reference for tests and benchmarks.
ParallelogramCount count_parallelogram_scan(std::int64_t p, std::int64_t q, std::int64_t ell);

/// delta_tau(p;q,l) as an exact integer; p odd. Throws ConsistencyError if
/// the count is ever even.
std::int64_t delta_tau_exact(std::int64_t p, std::int64_t q, std::int64_t ell);

/// delta(p;q,l) as an exact rational; p odd.
Rational delta_exact(std::int64_t p, std::int64_t q, std::int64_t ell);

/// D(p;b) = 16 s(2b, p) - 8 s(b, p) via Dedekind reciprocity; p odd.
Rational dedekind_D_exact(std::int64_t p, std::int64_t b);

/// Euclidean-type sequences attached to D(p;b):
///   a_0 = p, a_1 = b, q_i = floor(a_{i-1}/a_i), a_{i+1} = a_{i-1} - a_i q_i,
///   s_{-1} = 0, s_0 = 1, s_i = s_{i-1} q_i + s_{i-2},
///   x_0 = 0, x_1 = 1/2, x_{i+1} = x_{i-1} - x_i q_i,
/// run until a_N = 0. `a` and `x` hold indices 0..N, `q` and `s` hold 1..N-1.
struct DieterSequences {
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> q;
    std::vector<std::int64_t> s;
    std::vector<Rational> x;
};

DieterSequences dieter_sequences(std::int64_t p, std::int64_t b);

/// [x; y, z] = 1 iff z = m y (mod x) for some 1 <= m <= y* - 1.
int bracket_indicator(std::int64_t x, std::int64_t y, std::int64_t z);

/// (-1 - 2 sum_{k=1}^{l-1} [q; twob, k+1]) mod 4, in [0, 3].
int lawson_N_mod4(std::int64_t q, std::int64_t twob, std::int64_t ell);

} // namespace rholat
