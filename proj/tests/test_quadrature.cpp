#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nsverify/quadrature.hpp"

using namespace nsv;

TEST_SUITE("quadrature") {

TEST_CASE("plain Gaussian integral") {
    QuadResult r = verify_gaussian_identity(GaussianIdentity::C1, 1.0, 0.0, 0.0);
    CHECK(r.reference == doctest::Approx(3.5449077018).epsilon(1e-9));
    CHECK(r.rel_err <= 1e-10);
    CHECK(r.est_abs_err <= 1e-8);
}

TEST_CASE("odd integrand vanishes at x = 0") {
    QuadResult r = verify_gaussian_identity(GaussianIdentity::C2, 0.5, 1.0, 0.0);
    CHECK(r.reference == 0.0);
    CHECK(std::abs(r.computed) <= 1e-12);
    CHECK(r.rel_err <= 1e-10);
}

TEST_CASE("modulated Gaussian at generic parameters") {
    QuadResult r = verify_gaussian_identity(GaussianIdentity::C2, 0.3, 2.0, 0.7);
    double expect = 2.0 * std::sqrt(0.3 * M_PI) * std::exp(-1.2) * std::sin(1.4);
    CHECK(r.reference == doctest::Approx(expect).epsilon(1e-14));
    CHECK(std::abs(r.computed - expect) / (2.0 * std::sqrt(0.3 * M_PI)) <= 1e-10);
}

TEST_CASE("full parameter sweep stays within 1e-10") {
    auto results = default_sweep();
    CHECK(results.size() == 108);  // 3 identities x 4 tau x 3 alpha x 3 x
    for (const auto& r : results) {
        INFO(identity_name(r.id), " tau=", r.tau, " alpha=", r.alpha, " x=", r.x);
        CHECK(r.rel_err <= 1e-10);
    }
}

TEST_CASE("cosine and sine identities are mutually consistent in closed form") {
    CHECK(c2_c3_consistency() <= 1e-12);
}

TEST_CASE("rejects nonpositive tau") {
    CHECK_THROWS_AS(verify_gaussian_identity(GaussianIdentity::C1, 0.0, 1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_gaussian_identity(GaussianIdentity::C3, -2.0, 1.0, 0.0),
                    std::invalid_argument);
}

}  // TEST_SUITE
