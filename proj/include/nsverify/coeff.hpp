#pragma once

#include <gmpxx.h>

#include <string>

namespace nsv {

/// Arbitrary-precision rational, stored in lowest terms with positive
/// denominator (gmp keeps results of arithmetic canonical; raw construction
/// goes through make_rational below).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string rational_str(const Rational& r);

/// Exact scalar of the form a + b*sqrt(3), a and b rational.
///
/// This is the coefficient field of the whole symbolic layer: it is closed
/// under +, -, * and division by nonzero values (sqrt(3) is irrational, so
/// a + b*sqrt(3) = 0 only when a = b = 0), and it contains cos and sin of
/// every integer multiple of pi/6.
class Coeff {
public:
    Coeff() : a_(0), b_(0) {}
    Coeff(long n) : a_(n), b_(0) {}  // NOLINT: implicit by design
    Coeff(Rational a) : a_(std::move(a)), b_(0) {}
    Coeff(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    /// num/den
    static Coeff rat(long num, long den = 1);
    /// (num/den) * sqrt(3)
    static Coeff rt3(long num, long den = 1);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    double to_double() const;

    Coeff operator-() const { return {-a_, -b_}; }
    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);

    /// Multiplicative inverse; throws std::domain_error on zero.
    Coeff inverse() const;

    friend Coeff operator+(Coeff x, const Coeff& y) { return x += y; }
    friend Coeff operator-(Coeff x, const Coeff& y) { return x -= y; }
    friend Coeff operator*(Coeff x, const Coeff& y) { return x *= y; }
    friend Coeff operator/(const Coeff& x, const Coeff& y) { return x * y.inverse(); }

    friend bool operator==(const Coeff& x, const Coeff& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Coeff& x, const Coeff& y) { return !(x == y); }

    /// "p/q", "r/s√3" or "p/q+r/s√3" (lowest terms, q omitted when 1).
    std::string str() const;

private:
    Rational a_, b_;
};

/// Exact cos(n*pi/6) / sin(n*pi/6); the values lie in {0, ±1/2, ±√3/2, ±1}.
Coeff cos_pi6(long n);
Coeff sin_pi6(long n);

}  // namespace nsv
