#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over GMP integers.
 *
 * Every value is kept in lowest terms with a positive denominator; zero is
 * 0/1. All invariant values of the library (cotangent sums, rho-invariants,
 * gradings before integrality checks) are carried in this type.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace rholat {

using BigInt = mpz_class;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(static_cast<long>(n)), den_(1) {} // NOLINT(implicit)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}                // NOLINT(implicit)
    Rational(BigInt n, BigInt d);
    Rational(std::int64_t n, std::int64_t d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return sgn(num_); }

    double to_double() const;
    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Floor division and non-negative remainder for signed machine integers.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Non-negative residue of a big integer.
std::int64_t mod_floor(const BigInt& a, std::int64_t m);

} // namespace rholat
