#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsverify/flows.hpp"

namespace nsv {

/// Inertial term g_i = sum_j v_j d v_i / d x_j, exact.
VectorField compute_inertial(const VectorField& v);

/// Split of one inertial component into the part free of x_axis and the rest.
struct Split {
    TrigPoly axis_independent;  // terms with k_axis = 0
    TrigPoly remainder;
};
Split split_axis_independent(const TrigPoly& g_i, int axis);

/// The lemma's condition for periodic zero-mean fields: g is exactly a
/// gradient iff it is curl-free and every component has zero k = 0 content.
struct GradientCheck {
    bool pass = false;
    TrigPoly witness;  // first nonzero curl component, or offending k = 0 part
    std::string detail;
};
GradientCheck gradient_condition_check(const VectorField& g);

/// Dynamically consistent pressure -rho * potential(g), zero mean.
/// Propagates PotentialError when g is not a gradient.
TrigPoly reconstruct_pressure(const VectorField& g, const Coeff& rho = Coeff(1));

/// Exact match p_rec = s * p_paper + offset with s in {+1, -1}; anything
/// short of a zero residual is reported as no-match.
struct PressureMatch {
    bool matched = false;
    int sign = 0;
    TrigPoly offset;    // constant part of p_rec - s * p_paper
    TrigPoly residual;  // zero when matched
};
PressureMatch compare_pressure(const TrigPoly& p_rec, const TrigPoly& p_paper);

/// Residual of the momentum equation grouped by time factor. With velocity
/// V e^{-r a^2 kt} and pressure P e^{-2r a^2 kt} the equation splits into
///   kappa e^{-r a^2 kt}  : -(r alpha^2 V + laplacian V)
///   e^{-2r a^2 kt}       : G + (1/rho) grad P
/// and the flow solves it iff both groups vanish identically (kappa and rho
/// factor out of their groups).
struct MomentumResidual {
    VectorField linear;
    VectorField pressure;
    bool all_zero() const;
};
/// Throws std::invalid_argument unless pressure.rate == 2 * velocity rate.
MomentumResidual momentum_residual(const FlowSpec& flow, const DecayField& pressure,
                                   const Coeff& rho = Coeff(1));

/// Exact cell mean of |V|^2/2 per alpha grade; decays as e^{-2r a^2 kt}.
struct EnergyResult {
    std::map<int, Coeff> mean_per_grade;
    Rational decay_rate;
    double value(double alpha) const;
};
EnergyResult kinetic_energy_mean(const DecayField& v);
/// Same, with the flow's exact squared profile scale applied.
EnergyResult kinetic_energy_mean(const FlowSpec& flow);

/// curl v = lambda * alpha * v test over exact candidate multipliers, plus
/// the mean helicity (constant mode of v . curl v, per alpha grade).
struct BeltramiResult {
    std::optional<Coeff> lambda;  // multiplier of alpha; nullopt if none match
    std::map<int, Coeff> mean_helicity;
};
BeltramiResult beltrami_check(const VectorField& v, const std::vector<Coeff>& candidates);

/// All phase triples on the pi/6 lattice {-5pi/6..pi}^3 whose inertial term
/// has vanishing axis-independent parts (V_1 = V_2 = V_3 = 0 exactly).
std::vector<PhaseTriple> phase_condition_scan();

/// Exact Leray decomposition per spatial mode: returns g minus its gradient
/// part (k = 0 modes pass through unchanged). Zero iff g is a gradient of a
/// periodic potential plus a constant.
VectorField leray_remainder_exact(const VectorField& g);

/// sqrt of the exact cell-mean of |f|^2, evaluated at numeric alpha.
double l2_mean_norm(const VectorField& f, double alpha);

}  // namespace nsv
