#include "nsverify/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "nsverify/parallel.hpp"

namespace nsv {

std::string identity_name(GaussianIdentity id) {
    switch (id) {
        case GaussianIdentity::C1: return "C1";
        case GaussianIdentity::C2: return "C2";
        default: return "C3";
    }
}

QuadResult verify_gaussian_identity(GaussianIdentity id, double tau, double alpha, double x) {
    if (!(tau > 0.0)) throw std::invalid_argument("verify_gaussian_identity: tau must be > 0");

    auto kernel = [&](double u) { return std::exp(-(x - u) * (x - u) / (4.0 * tau)); };
    auto integrand = [&](double u) {
        switch (id) {
            case GaussianIdentity::C1: return kernel(u);
            case GaussianIdentity::C2: return std::sin(alpha * u) * kernel(u);
            default: return std::cos(alpha * u) * kernel(u);
        }
    };

    double window = 10.0 * std::sqrt(2.0 * tau);
    if (id != GaussianIdentity::C1 && alpha != 0.0)
        window = std::max(window, 2.0 * M_PI / std::abs(alpha));

    double quad_err = 0.0;
    double computed = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, x - window, x + window, 12, 1e-13, &quad_err);

    // |integrand prefactor| <= 1, so both tails are bounded by the Gaussian
    // tail sqrt(pi tau) erfc(W / 2 sqrt(tau)) each.
    double tail = 2.0 * std::sqrt(M_PI * tau) * std::erfc(window / (2.0 * std::sqrt(tau)));

    double amplitude = 2.0 * std::sqrt(M_PI * tau);
    double reference;
    switch (id) {
        case GaussianIdentity::C1: reference = amplitude; break;
        case GaussianIdentity::C2:
            reference = amplitude * std::exp(-alpha * alpha * tau) * std::sin(alpha * x);
            break;
        default:
            reference = amplitude * std::exp(-alpha * alpha * tau) * std::cos(alpha * x);
            break;
    }

    QuadResult r;
    r.id = id;
    r.tau = tau;
    r.alpha = alpha;
    r.x = x;
    r.computed = computed;
    r.reference = reference;
    r.rel_err = std::abs(computed - reference) / amplitude;
    r.est_abs_err = quad_err + tail;
    return r;
}

std::vector<QuadResult> default_sweep() {
    static const double taus[] = {0.1, 0.5, 1.0, 2.0};
    static const double alphas[] = {0.5, 1.0, 2.0};
    static const double xs[] = {0.0, 0.7, M_PI};
    static const GaussianIdentity ids[] = {GaussianIdentity::C1, GaussianIdentity::C2,
                                           GaussianIdentity::C3};

    struct Point {
        GaussianIdentity id;
        double tau, alpha, x;
    };
    std::vector<Point> grid;
    for (auto id : ids)
        for (double tau : taus)
            for (double a : alphas)
                for (double x : xs) grid.push_back({id, tau, a, x});

    std::vector<QuadResult> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        out[i] = verify_gaussian_identity(grid[i].id, grid[i].tau, grid[i].alpha, grid[i].x);
    });
    return out;
}

double c2_c3_consistency() {
    // d/dx of C3's right side must reproduce -alpha times C2's right side.
    // The derivative is taken by complex step (no subtractive cancellation),
    // so the comparison is meaningful at the 1e-12 level.
    static const double taus[] = {0.1, 0.5, 1.0, 2.0};
    static const double alphas[] = {0.5, 1.0, 2.0};
    static const double xs[] = {0.0, 0.7, M_PI};
    const double h = 1e-8;
    double worst = 0.0;
    for (double tau : taus)
        for (double a : alphas) {
            double amp = 2.0 * std::sqrt(M_PI * tau) * std::exp(-a * a * tau);
            for (double x : xs) {
                std::complex<double> z(x, h);
                double deriv = (amp * std::cos(a * z)).imag() / h;
                double expected = -a * amp * std::sin(a * x);
                worst = std::max(worst, std::abs(deriv - expected) / (a * amp));
            }
        }
    return worst;
}

}  // namespace nsv
