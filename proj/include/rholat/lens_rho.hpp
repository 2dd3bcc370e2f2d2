#pragma once

/**
 * @file lens_rho.hpp
 * @brief Equivariant rho-invariants of lens spaces L(p,q).
 *
 * For the U(1) representation alpha_l (generator -> exp(2 pi i l/p)) and the
 * canonical lift:
 *
 *   Bprime  [-z1, z2]:  rho = -(2/p) sum tan(pi k/p) cot(pi k q/p) sin^2(pi k l/p)
 *   B       [z1, -z2]:  rho = -(2/p) sum cot(pi k/p) tan(pi k q/p) sin^2(pi k l/p)
 *   A       conjugation: rho = 0 for every l (diagonal SU(2) representation)
 *
 * For even p the summands with a singular tan are left out (k = p/2 for
 * Bprime, q k = p/2 mod p for B). For odd p the B sum equals
 * delta_tau(p; q, l), and reindexing k -> q* k turns the Bprime sum into
 * delta_tau(p; q*, q* l); both are then available exactly.
 */

#include <cstdint>
#include <optional>

#include "rholat/cotan_float.hpp"
#include "rholat/involution.hpp"
#include "rholat/rational.hpp"

namespace rholat {

struct LensSpace {
    std::int64_t p;
    std::int64_t q;

    /// Validates p >= 2, 1 <= q <= p-1 after reduction, gcd(p,q) = 1.
    static LensSpace make(std::int64_t p, std::int64_t q);
};

/// Weight l of alpha_l, reduced into [0, p-1].
struct U1Rep {
    std::int64_t ell;

    static U1Rep make(const LensSpace& space, std::int64_t ell);
};

struct LensRho {
    std::optional<Rational> exact; ///< absent for even p
    FloatSumResult numeric;
};

/// Closed-form sum for B or Bprime in floating point (A returns 0, no terms).
FloatSumResult rho_lens_float(const LensSpace& space, const U1Rep& rep, Involution inv);

/// Exact value for odd p (B, Bprime) or any p (A); nullopt for even p.
std::optional<Rational> rho_lens_exact(const LensSpace& space, const U1Rep& rep, Involution inv);

/// Both routes; throws ConsistencyError if they differ by more than `tolerance`.
LensRho rho_lens(const LensSpace& space, const U1Rep& rep, Involution inv,
                 double tolerance = kDefaultTolerance);

} // namespace rholat
