#include <doctest.h>

#include <cmath>
#include <random>

#include "nsverify/coeff.hpp"

using namespace nsv;

TEST_SUITE("coeff") {

TEST_CASE("rationals are canonical") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(1, -2) == make_rational(-1, 2));
    CHECK(rational_str(make_rational(-3, 6)) == "-1/2");
    CHECK(rational_str(make_rational(4, 2)) == "2");
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("field arithmetic in Q(sqrt 3)") {
    Coeff x(make_rational(1), make_rational(1));   // 1 + √3
    Coeff y(make_rational(1), make_rational(-1));  // 1 - √3
    CHECK(x * y == Coeff::rat(-2));                // 1 - 3

    Coeff z = Coeff::rat(3, 32) + Coeff::rt3(5, 8);
    CHECK(z * z.inverse() == Coeff(1));
    CHECK((x / y) * y == x);
    CHECK((-x) + x == Coeff(0));
    CHECK(Coeff(0).is_zero());
    CHECK_THROWS_AS(Coeff(0).inverse(), std::domain_error);
}

TEST_CASE("zero only at a = b = 0") {
    // a + b sqrt(3) with rational a, b vanishes only trivially
    Coeff c = Coeff::rat(-12, 7) + Coeff::rt3(99, 100);
    CHECK(!c.is_zero());
    CHECK(std::abs(c.to_double() - (-12.0 / 7.0 + 99.0 / 100.0 * std::sqrt(3.0))) < 1e-15);
}

TEST_CASE("special angles") {
    for (long n = -30; n <= 30; ++n) {
        CHECK(std::abs(cos_pi6(n).to_double() - std::cos(n * M_PI / 6.0)) < 1e-15);
        CHECK(std::abs(sin_pi6(n).to_double() - std::sin(n * M_PI / 6.0)) < 1e-15);
    }
    CHECK(cos_pi6(1) == Coeff::rt3(1, 2));
    CHECK(sin_pi6(1) == Coeff::rat(1, 2));
    CHECK(cos_pi6(2) == Coeff::rat(1, 2));
    CHECK(sin_pi6(3) == Coeff::rat(1));
    CHECK(cos_pi6(3) == Coeff::rat(0));
    CHECK(sin_pi6(-2) == Coeff::rt3(-1, 2));
}

TEST_CASE("formatting") {
    CHECK(Coeff::rat(3, 32).str() == "3/32");
    CHECK(Coeff::rat(-3, 8).str() == "-3/8");
    CHECK(Coeff::rt3(3, 32).str() == "3/32√3");
    CHECK(Coeff::rt3(-1, 2).str() == "-1/2√3");
    CHECK((Coeff::rat(1, 2) + Coeff::rt3(-1, 2)).str() == "1/2-1/2√3");
    CHECK((Coeff::rat(-3, 64) + Coeff::rt3(3, 64)).str() == "-3/64+3/64√3");
    CHECK(Coeff(0).str() == "0");
}

TEST_CASE("random arithmetic agrees with doubles") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
    auto pick = [&] { return Coeff::rat(num(rng), den(rng)) + Coeff::rt3(num(rng), den(rng)); };
    for (int i = 0; i < 300; ++i) {
        Coeff a = pick(), b = pick();
        CHECK(std::abs((a + b).to_double() - (a.to_double() + b.to_double())) < 1e-12);
        CHECK(std::abs((a * b).to_double() - (a.to_double() * b.to_double())) < 1e-11);
        if (!b.is_zero())
            CHECK(std::abs((a / b).to_double() - a.to_double() / b.to_double()) < 1e-9);
        CHECK((a * b - b * a).is_zero());
    }
}

}  // TEST_SUITE
