#pragma once

#include <cstdint>

#include "rholat/rational.hpp"

namespace rholat {

struct GcdResult {
    std::int64_t g; ///< gcd(a, b) >= 0
    std::int64_t x;
    std::int64_t y; ///< a*x + b*y == g
};

/// Extended Euclid. Throws DomainError when a == b == 0.
GcdResult extended_gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m (m >= 2), in [1, m-1]. Negative a is reduced first.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/**
 * Classical Dedekind sum s(b, p) = sum_{k=1}^{p-1} ((k/p)) ((kb/p)).
 *
 * Evaluated exactly by iterating the reciprocity law
 *   s(b,p) + s(p,b) = -1/4 + (b/p + p/b + 1/(pb)) / 12
 * down the Euclidean remainder sequence, so the cost is O(log p) rational
 * operations. b is reduced modulo p first; gcd(b, p) must be 1.
 */
Rational dedekind_sum(std::int64_t b, std::int64_t p);

} // namespace rholat
