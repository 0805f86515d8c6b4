#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsverify/decay_field.hpp"
#include "nsverify/trig_poly.hpp"

namespace nsv {

/// One catalog entry: a closed-form flow with everything the verification
/// suite needs. Velocity profiles are stored unscaled and exact; numeric
/// prefactors outside Q(√3) (the helicity-normalized variant) live in
/// linear_scale, with the exact square kept separately so quadratic checks
/// stay exact.
struct FlowSpec {
    std::string name;
    std::string description;

    DecayField velocity;                        // 3 profiles, rate r
    std::optional<DecayField> pressure_paper;   // printed pressure / rho, rate 2r
    std::optional<VectorField> g_reference;     // printed inertial term
    std::optional<PhaseTriple> phases;          // general-family parameter
    std::optional<std::array<Coeff, 3>> abc_coeffs;
    std::optional<Coeff> v0;
    std::optional<double> fixed_alpha;          // bound wave number (pi), when printed so
    double linear_scale = 1.0;
    Coeff scale_sq = Coeff(1);

    VectorField velocity_profiles() const;
};

/// Triple-product family, phases symbolic (the xi_j stay as frequencies).
VectorField general_velocity_symbolic();
/// Printed axis-independent parts of its inertial term, phases symbolic.
VectorField v_axis_independent_reference();
/// Printed remainder parts, phases symbolic.
VectorField w_remainder_reference();
/// Printed divergence of the inertial term at the solution phases.
TrigPoly div_g_reference();
/// Printed compact velocity profiles at the solution phases.
VectorField paper_compact_profiles();

PhaseTriple paper_phases();  // (-pi/3, pi/3, pi/2)

FlowSpec make_general_family(const PhaseTriple& phases);
FlowSpec make_paper_solution();
FlowSpec make_taylor();
FlowSpec make_abc(const Coeff& a, const Coeff& b, const Coeff& c);
FlowSpec make_antuono(const Coeff& v0);

std::vector<std::string> flow_names();

/// CLI parameter bundle for flow construction.
struct FlowParams {
    std::optional<PhaseTriple> phases;  // general_xi
    Coeff abc_a = Coeff(1), abc_b = Coeff(1), abc_c = Coeff(1);
    Coeff v0 = Coeff(1);
};
/// Throws std::invalid_argument for unknown names.
FlowSpec make_flow(const std::string& name, const FlowParams& params = {});

}  // namespace nsv
