#pragma once

#include <gmpxx.h>

#include <string>

#include "distset/error.hpp"

namespace distset {

/// Arbitrary-precision rational. mpq_class keeps gcd(num,den)=1, den>=1 after
/// canonicalize(), which is exactly the canonical form required here.
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string render_rational(const Rational& q);
bool rational_is_integer(const Rational& q);
int sign_of(const Rational& q);

/// Exact element a + b*sqrt(m) of a real quadratic field Q(sqrt(m)).
///
/// Canonical form: m is square-free and non-negative; b == 0 implies m == 0,
/// so plain rationals combine freely with values from any single radicand.
/// Mixing two distinct irrational radicands is an error by design.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), m_(0) {}
    QuadExt(long v) : a_(v), b_(0), m_(0) {}  // NOLINT: implicit by intent
    QuadExt(const Rational& a) : a_(a), b_(0), m_(0) { a_.canonicalize(); }
    QuadExt(Rational a, Rational b, long m);

    static QuadExt sqrt_of(long m) { return QuadExt(Rational(0), Rational(1), m); }
    static QuadExt from_fraction(long num, long den);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long m() const { return m_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_integer() const { return is_rational() && rational_is_integer(a_); }

    /// Exact sign in {-1, 0, +1}, decided by case analysis on the signs of a
    /// and b and, when they disagree, by comparing a^2 against b^2*m.
    int sign() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_, m_); }
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    bool operator==(const QuadExt& o) const {
        return m_ == o.m_ && a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }
    bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadExt& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const QuadExt& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const QuadExt& o) const { return (*this - o).sign() >= 0; }

    QuadExt abs() const { return sign() < 0 ? -*this : *this; }
    QuadExt conjugate() const { return QuadExt(a_, -b_, m_); }

    double to_double() const;

    /// Human-readable form: "3/2", "sqrt(5)", "1/2 + 1/2*sqrt(5)", ...
    std::string text() const;

private:
    // Resolves the common radicand of two operands (0 = rational).
    static long common_radicand(const QuadExt& x, const QuadExt& y);

    Rational a_, b_;
    long m_;
};

inline int sign_of(const QuadExt& x) { return x.sign(); }

}  // namespace distset
