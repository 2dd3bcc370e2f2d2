#include <numeric>
#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rholat/cotan_float.hpp"
#include "rholat/errors.hpp"
#include "rholat/exact_arith.hpp"
#include "rholat/lattice_exact.hpp"

using namespace rholat;

TEST(CotanFloat, Trig)
{
    EXPECT_NEAR(cot_pi_frac(1, 4), 1.0, 1e-15);
    EXPECT_NEAR(cot_pi_frac(1, 3), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_EQ(cot_pi_frac(1, 2), 0.0);
    EXPECT_NEAR(cot_pi_frac(-1, 6), -std::sqrt(3.0), 1e-14);
    EXPECT_NEAR(tan_pi_frac(1, 3), std::sqrt(3.0), 1e-14);
    EXPECT_NEAR(sin2_pi_frac(5, 6), 0.25, 1e-15);
}

TEST(CotanFloat, PinnedSums)
{
    EXPECT_NEAR(delta_float(3, 2, 2).value, -1.0 / 3, 1e-10);
    EXPECT_NEAR(delta_float(3, 1, 2).value, 1.0 / 3, 1e-10);
    EXPECT_NEAR(delta_float(7, 6, 2).value, -13.0 / 7, 1e-10);
    EXPECT_NEAR(delta_tau_float(3, 2, 2).value, 1.0, 1e-10);
    EXPECT_NEAR(delta_tau_float(7, 6, 2).value, 1.0, 1e-10);
    EXPECT_NEAR(dedekind_D_float(3, 2).value, 4.0 / 3, 1e-10);
    EXPECT_NEAR(dedekind_D_float(7, 6).value, 12.0 / 7, 1e-10);
    EXPECT_NEAR(dedekind_D_float(13, 11).value, 48.0 / 13, 1e-10);
    EXPECT_NEAR(eta_lens_float(3, 2).value, -2.0 / 3, 1e-10);
    EXPECT_NEAR(eta_lens_float(7, 6).value, -6.0 / 7, 1e-10);
    EXPECT_NEAR(eta_lens_float(5, 2).value, -0.5 * dedekind_D_float(5, 2).value, 1e-10);
    for (std::int64_t p : {3, 5, 8, 12})
        EXPECT_EQ(delta_float(p, 1, 0).value, 0.0);
}

TEST(CotanFloat, RejectsNonCoprime)
{
    EXPECT_THROW(delta_float(6, 3, 2), DomainError);
    EXPECT_THROW(delta_tau_float(6, 4, 2), DomainError);
    EXPECT_THROW(dedekind_D_float(9, 3), DomainError);
}

TEST(CotanFloat, EvenModulusSkipsSingularTerms)
{
    const auto r = delta_tau_float(4, 1, 2);
    EXPECT_EQ(r.skipped, 1);
    EXPECT_EQ(r.terms + r.skipped, 3);
    EXPECT_NEAR(r.value, static_cast<double>(oracle::delta_tau_ld(4, 1, 2)), 1e-12);
    EXPECT_EQ(delta_tau_float(7, 3, 2).skipped, 0);
}

TEST(CotanFloat, AgreesWithLongDoubleOracle)
{
    for (std::int64_t p = 2; p <= 41; ++p)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            for (std::int64_t l = 0; l < p; ++l) {
                ASSERT_NEAR(delta_float(p, q, l).value, static_cast<double>(oracle::delta_ld(p, q, l)), 1e-9)
                    << p << "," << q << "," << l;
                ASSERT_NEAR(delta_tau_float(p, q, l).value,
                            static_cast<double>(oracle::delta_tau_ld(p, q, l)), 1e-9)
                    << p << "," << q << "," << l;
            }
        }
}

TEST(CotanFloat, CompensatedSumBeatsNaive)
{
    CompensatedSum s;
    s.add(1e16);
    for (int i = 0; i < 1000; ++i)
        s.add(1.0);
    s.add(-1e16);
    EXPECT_EQ(s.value(), 1000.0);
}

TEST(Lattice, CountsForThreeTwoTwo)
{
    const auto c = count_parallelogram(3, 2, 2);
    EXPECT_EQ(c.interior, 1);
    EXPECT_EQ(c.on_ell_line, 1);
    EXPECT_EQ(c.on_axis, 1);
    EXPECT_EQ(c.signed_interior, 1);
    EXPECT_EQ(c.signed_ell, -1);
    EXPECT_EQ(c.signed_axis, -1);
    EXPECT_EQ(c.q_inverse, 2);
}

TEST(Lattice, Errors)
{
    EXPECT_THROW(count_parallelogram(7, 3, 7), DomainError);
    EXPECT_THROW(count_parallelogram(7, 3, 0), DomainError);
    EXPECT_THROW(count_parallelogram(7, 3, 3), DomainError);
    EXPECT_THROW(count_parallelogram(9, 3, 2), DomainError);
    EXPECT_THROW(delta_tau_exact(8, 3, 2), DomainError);
    EXPECT_THROW(dedekind_D_exact(8, 3), DomainError);
}

TEST(Lattice, FastPathMatchesBruteForceDoubleLoop)
{
    for (std::int64_t p = 2; p <= 40; ++p)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            for (std::int64_t l = 2; l < p; l += 2) {
                if (p % 2 == 1 && normalize_ell(p, l) != l)
                    continue;
                const auto c = count_parallelogram(p, q, l);
                const auto o = oracle::brute_counts(p, q, l);
                ASSERT_EQ(c.interior, o.interior) << p << "," << q << "," << l;
                ASSERT_EQ(c.on_ell_line, o.on_ell);
                ASSERT_EQ(c.on_axis, o.on_axis);
                ASSERT_EQ(c.signed_interior, o.s_interior);
                ASSERT_EQ(c.signed_ell, o.s_ell);
                ASSERT_EQ(c.signed_axis, o.s_axis);
                ASSERT_EQ(c, count_parallelogram_scan(p, q, l));
            }
        }
}

TEST(Lattice, ExactValues)
{
    EXPECT_EQ(delta_tau_exact(3, 2, 2), 1);
    EXPECT_EQ(delta_tau_exact(7, 6, 2), 1);
    EXPECT_EQ(delta_exact(3, 2, 2), Rational(-1, 3));
    EXPECT_EQ(delta_exact(7, 6, 2), Rational(-13, 7));
    EXPECT_EQ(delta_exact(3, 1, 2), Rational(1, 3));
    const auto c = count_parallelogram(5, 2, 4);
    EXPECT_NEAR(static_cast<double>(c.signed_total() + 1), delta_tau_float(5, 2, 4).value, 1e-9);
    EXPECT_EQ(dedekind_D_exact(3, 2), Rational(4, 3));
    EXPECT_EQ(dedekind_D_exact(7, 6), Rational(12, 7));
    EXPECT_EQ(dedekind_D_exact(13, 11), Rational(48, 13));
    for (std::int64_t n = 1; n <= 50; ++n)
        EXPECT_EQ(dedekind_D_exact(6 * n + 1, 5 * n + 1),
                  Rational(2 * (n - 1)) + Rational(2 * (5 * n + 1), 6 * n + 1));
}

TEST(Lattice, ExactAgainstOracleAndIdentities)
{
    for (std::int64_t p = 3; p <= 45; p += 2)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1)
                continue;
            for (std::int64_t l = 2; l < p; l += 2) {
                const std::int64_t dt = delta_tau_exact(p, q, l);
                EXPECT_EQ(std::abs(dt) % 2, 1);
                EXPECT_NEAR(dt, static_cast<double>(oracle::delta_tau_ld(p, q, l)), 1e-9);
                const Rational d = delta_exact(p, q, l);
                EXPECT_NEAR(d.to_double(), static_cast<double>(oracle::delta_ld(p, q, l)), 1e-9);
                EXPECT_EQ(Rational(dt) + d, Rational(2) * delta_exact(p, 2 * q % p, l));
                // l -> -l leaves sin^2 unchanged.
                EXPECT_EQ(delta_tau_exact(p, q, 2 * p - l), dt);
            }
            EXPECT_EQ(dedekind_D_exact(p, q),
                      Rational(16) * dedekind_sum(2 * q, p) - Rational(8) * dedekind_sum(q, p));
            EXPECT_NEAR(dedekind_D_exact(p, q).to_double(), dedekind_D_float(p, q).value, 1e-9);
        }
}

TEST(Lattice, NormalizeEll)
{
    EXPECT_EQ(normalize_ell(7, 3), 4);
    EXPECT_EQ(normalize_ell(7, 4), 4);
    EXPECT_EQ(normalize_ell(7, 16), 2);
    EXPECT_EQ(normalize_ell(7, -2), 2);
    EXPECT_EQ(normalize_ell(8, 10), 2);
}

TEST(Dieter, Sequences)
{
    const auto a = dieter_sequences(7, 6);
    EXPECT_EQ(a.a, (std::vector<std::int64_t>{7, 6, 1, 0}));
    EXPECT_EQ(a.q, (std::vector<std::int64_t>{1, 6}));
    const auto b = dieter_sequences(13, 11);
    EXPECT_EQ(b.a, (std::vector<std::int64_t>{13, 11, 2, 1, 0}));
    EXPECT_EQ(b.q, (std::vector<std::int64_t>{1, 5, 2}));
    EXPECT_EQ(b.s, (std::vector<std::int64_t>{1, 6, 13}));
    EXPECT_THROW(dieter_sequences(7, 7), DomainError);
    EXPECT_THROW(dieter_sequences(8, 6), DomainError);
}

TEST(Lawson, BracketIndicator)
{
    EXPECT_EQ(bracket_indicator(7, 5, 3), 1);
    EXPECT_EQ(bracket_indicator(7, 5, 5), 1);
    EXPECT_EQ(bracket_indicator(7, 5, 0), 0);
    // Direct enumeration of y, 2y, ..., (y*-1) y.
    for (std::int64_t x = 3; x <= 30; ++x)
        for (std::int64_t y = 1; y < x; ++y) {
            if (std::gcd(x, y) != 1)
                continue;
            const std::int64_t ys = oracle::brute_inverse(y, x);
            for (std::int64_t z = -x; z <= 2 * x; ++z) {
                int hit = 0;
                for (std::int64_t m = 1; m < ys; ++m)
                    if (((y * m - z) % x + x) % x == 0)
                        hit = 1;
                ASSERT_EQ(bracket_indicator(x, y, z), hit) << x << "," << y << "," << z;
            }
        }
}

TEST(Lawson, BandsOfTheThreeFamily)
{
    for (std::int64_t n = 1; n <= 20; ++n) {
        const std::int64_t q = 6 * n + 1;
        for (std::int64_t l = 2; l <= 5 * n; l += 2) {
            const int expected = (l <= 2 * n) ? 3 : (l <= 4 * n ? 1 : 3);
            EXPECT_EQ(lawson_N_mod4(q, 4 * n + 1, l), expected) << n << "," << l;
        }
    }
}
