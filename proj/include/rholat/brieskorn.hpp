#pragma once

/**
 * @file brieskorn.hpp
 * @brief Invariants of the Brieskorn spheres Sigma(2,p,q), p and q odd.
 *
 * Pipeline per irreducible SU(2) representation alpha with rotation numbers
 * (1, l2, l3) and Seifert invariants (b1, b2, b3), pq b1 + 2q b2 + 2p b3 = 1:
 *
 *   e      = pq + 2q l2 + 2p l3
 *   gr     = e^2/pq + delta(p; b2, l2) + delta(q; b3, l3)
 *   rho    = 1 - 2/pq - 2 delta_tau(p; b2, l2) - 2 delta_tau(q; b3, l3)
 *              + 2 D(p; b2) + 2 D(q; b3)
 *   mu     = gr/2 + (1 - rho)/4
 *
 * gr and rho are evaluated exactly; rho is also evaluated from the
 * cot * tan * cos^2 sums directly and the two must agree.
 */

#include <compare>
#include <cstdint>
#include <vector>

#include "rholat/cotan_float.hpp"
#include "rholat/rational.hpp"

namespace rholat {

struct BrieskornSphere {
    std::int64_t p;
    std::int64_t q;

    /// p, q odd, >= 3, coprime. Throws DomainError otherwise.
    static BrieskornSphere make(std::int64_t p, std::int64_t q);
};

struct SeifertData {
    std::int64_t b1;
    std::int64_t b2; ///< even
    std::int64_t b3; ///< even

    /// pq b1 + 2q b2 + 2p b3 == 1 with b2, b3 even.
    bool valid_for(const BrieskornSphere& s) const;

    /// (b2 + 2p m, b3 - 2q m); b1 is unchanged and validity preserved.
    SeifertData shifted(const BrieskornSphere& s, std::int64_t m) const;

    friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

/// Canonical solution: b2 the even solution in (0, 2p), b3 the even
/// solution of least absolute value, b1 determined.
SeifertData solve_seifert(const BrieskornSphere& s);

struct RotationNumbers {
    static constexpr std::int64_t l1 = 1;
    std::int64_t l2;
    std::int64_t l3;

    friend auto operator<=>(const RotationNumbers&, const RotationNumbers&) = default;
};

/// Angles (pi/2, pi l2/p, pi l3/q) obey the strict triangle inequalities and
/// sum to less than 2 pi. Checked in integers scaled by 2pq.
bool is_realizable(const BrieskornSphere& s, const RotationNumbers& rot);

/// All realizable (1, l2, l3) with l2, l3 even, sorted lexicographically.
std::vector<RotationNumbers> enumerate_reps(const BrieskornSphere& s);

struct Graded {
    BigInt value;
    int residue; ///< value mod 8 for gr, mod 4 for mu
};

std::int64_t rotation_e(const BrieskornSphere& s, const RotationNumbers& rot);

Graded fs_grading(const BrieskornSphere& s, const SeifertData& seifert, const RotationNumbers& rot);

/// Adjoint rho sums evaluated directly in floating point.
FloatSumResult rho_brieskorn_float(const BrieskornSphere& s, const SeifertData& seifert,
                                   const RotationNumbers& rot);

/// Exact rho_{Ad alpha}; checked against rho_brieskorn_float.
Rational rho_brieskorn(const BrieskornSphere& s, const SeifertData& seifert,
                       const RotationNumbers& rot, double tolerance = kDefaultTolerance);

Graded mu_grading(const BrieskornSphere& s, const SeifertData& seifert, const RotationNumbers& rot,
                  double tolerance = kDefaultTolerance);

struct FloerRecord {
    RotationNumbers rot;
    std::int64_t e = 0;
    BigInt gr;
    int gr_mod8 = 0;
    Rational rho;
    double rho_float = 0.0;
    BigInt mu;
    int mu_mod4 = 0;

    /// Compares the exact invariants; rho_float is diagnostic only.
    bool same_invariants(const FloerRecord& o) const
    {
        return rot == o.rot && e == o.e && gr == o.gr && gr_mod8 == o.gr_mod8 && rho == o.rho &&
               mu == o.mu && mu_mod4 == o.mu_mod4;
    }
};

FloerRecord floer_record(const BrieskornSphere& s, const SeifertData& seifert,
                         const RotationNumbers& rot, double tolerance = kDefaultTolerance);

/// Signature of the (p,q) torus knot: each pair 1 <= a < p, 1 <= b < q
/// contributes -1 when a/p + b/q lies in (1/2, 3/2) and +1 otherwise.
std::int64_t torus_signature(std::int64_t p, std::int64_t q);

} // namespace rholat
