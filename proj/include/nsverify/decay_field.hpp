#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nsverify/trig_poly.hpp"

namespace nsv {

/// Spatial profile(s) with a shared exponential time factor
/// exp(-rate * alpha^2 * kappa * t). The catalog solutions all factor this
/// way, so time never enters the symbolic layer.
struct DecayField {
    std::vector<TrigPoly> profiles;  // 1 (scalar) or 3 (vector)
    Rational rate;                   // >= 0

    DecayField() : rate(0) {}
    DecayField(std::vector<TrigPoly> p, Rational r) : profiles(std::move(p)), rate(std::move(r)) {
        if (rate < 0) throw std::invalid_argument("DecayField: negative decay rate");
        if (profiles.size() != 1 && profiles.size() != 3)
            throw std::invalid_argument("DecayField: expected 1 or 3 profiles");
    }

    double decay_factor(double t, double alpha, double kappa) const {
        return std::exp(-rate.get_d() * alpha * alpha * kappa * t);
    }
};

}  // namespace nsv
