#include "nsverify/coeff.hpp"

#include <cmath>
#include <stdexcept>

namespace nsv {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Coeff Coeff::rat(long num, long den) { return Coeff(make_rational(num, den)); }

Coeff Coeff::rt3(long num, long den) { return Coeff(Rational(0), make_rational(num, den)); }

double Coeff::to_double() const {
    static const double rt3 = std::sqrt(3.0);
    return a_.get_d() + b_.get_d() * rt3;
}

Coeff& Coeff::operator+=(const Coeff& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
    // (a1 + b1√3)(a2 + b2√3) = a1a2 + 3 b1b2 + (a1b2 + b1a2)√3
    Rational a = a_ * o.a_ + 3 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Coeff Coeff::inverse() const {
    // 1/(a + b√3) = (a - b√3)/(a² - 3b²); the norm a² - 3b² vanishes only
    // for a = b = 0 because √3 is irrational.
    Rational norm = a_ * a_ - 3 * b_ * b_;
    if (norm == 0) throw std::domain_error("Coeff::inverse: zero value");
    return {a_ / norm, -b_ / norm};
}

std::string Coeff::str() const {
    if (b_ == 0) return rational_str(a_);
    std::string root = rational_str(abs(b_)) + "√3";
    if (a_ == 0) return (b_ < 0 ? "-" : "") + root;
    return rational_str(a_) + (b_ < 0 ? "-" : "+") + root;
}

Coeff cos_pi6(long n) {
    long m = ((n % 12) + 12) % 12;
    switch (m) {
        case 0: return Coeff::rat(1);
        case 6: return Coeff::rat(-1);
        case 3:
        case 9: return Coeff::rat(0);
        case 1:
        case 11: return Coeff::rt3(1, 2);
        case 5:
        case 7: return Coeff::rt3(-1, 2);
        case 2:
        case 10: return Coeff::rat(1, 2);
        default: return Coeff::rat(-1, 2);  // m == 4 or 8
    }
}

Coeff sin_pi6(long n) { return cos_pi6(n - 3); }

}  // namespace nsv
