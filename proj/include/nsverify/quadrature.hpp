#pragma once

#include <string>
#include <vector>

namespace nsv {

enum class GaussianIdentity { C1, C2, C3 };

std::string identity_name(GaussianIdentity id);

/// One numeric check of a heat-kernel integral identity:
///   C1: int exp(-(x-u)^2/4tau) du            = 2 sqrt(pi tau)
///   C2: int sin(au) exp(-(x-u)^2/4tau) du    = 2 sqrt(pi tau) e^{-a^2 tau} sin(ax)
///   C3: the cosine analog
/// computed by adaptive quadrature over [x - W, x + W] with
/// W = max(10 sqrt(2 tau), 2pi/|a|); the analytic Gaussian tail bound is
/// folded into est_abs_err. rel_err is normalized by the identity's
/// amplitude 2 sqrt(pi tau) so the x = 0 zeros stay meaningful.
struct QuadResult {
    GaussianIdentity id;
    double tau, alpha, x;
    double computed, reference;
    double rel_err;
    double est_abs_err;
};

/// Throws std::invalid_argument for tau <= 0.
QuadResult verify_gaussian_identity(GaussianIdentity id, double tau, double alpha, double x);

/// tau in {0.1, 0.5, 1, 2} x alpha in {0.5, 1, 2} x x in {0, 0.7, pi},
/// all three identities.
std::vector<QuadResult> default_sweep();

/// Closed-form consistency: d/dx of C3's right side equals -alpha times
/// C2's right side; returns the max relative mismatch over the sweep grid.
double c2_c3_consistency();

}  // namespace nsv
