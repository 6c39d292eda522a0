#pragma once

/**
 * @file rat.hpp
 * @brief Exact arbitrary-precision rationals in canonical form.
 *
 * Rat wraps a GMP rational kept permanently canonical: reduced to lowest
 * terms, denominator positive, zero stored as 0/1. Equality is therefore
 * structural, and two Rat values compare equal iff numerator and
 * denominator both match. No floating point is involved anywhere.
 *
 * Text format: "num/den" with the denominator omitted when it is 1,
 * e.g. "-11/4", "13". The parser accepts an optional leading sign and
 * rejects a zero denominator.
 */

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "dioforge/error.hpp"

namespace dioforge {

/// Arbitrary-precision integer.
using Int = mpz_class;

class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}

    /// rat_make: canonical reduced rational with positive denominator.
    /// Throws ZeroDenominator when den == 0.
    Rat(const Int& num, const Int& den) {
        if (den == 0) raise(Errc::zero_denominator, "rat_make(" + num.get_str() + ", 0)");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    /// Parses the "num/den" text format. Throws ParseError on malformed
    /// input and ZeroDenominator when the denominator is zero.
    static Rat parse(std::string_view text);

    const Int& num() const { return v_.get_num(); }
    const Int& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const;

    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }
    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) raise(Errc::zero_denominator, "division by zero");
        return Rat(mpq_class(a.v_ / b.v_));
    }

    Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
    Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
    Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat reciprocal() const {
        if (is_zero()) raise(Errc::zero_denominator, "reciprocal of zero");
        return Rat(den(), num());
    }

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

/// r^e by exact powering of numerator and denominator.
Rat pow(const Rat& r, unsigned long e);

/// Exact integer square root: m with m*m == n, or nullopt when n is not a
/// perfect square. Throws NegativeRadicand for n < 0.
std::optional<Int> int_sqrt_exact(const Int& n);

/// Witness that a rational is a perfect square: root*root == value exactly,
/// root >= 0.
struct SquareCertificate {
    Rat value;
    Rat root;
};

/// The atomic predicate of the whole artifact: present iff x is the square
/// of a rational, with the canonical nonnegative root as witness. Decided
/// by exact square-root extraction on the canonical numerator and
/// denominator separately.
std::optional<SquareCertificate> is_rational_square(const Rat& x);

} // namespace dioforge
