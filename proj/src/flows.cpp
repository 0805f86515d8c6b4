#include "nsverify/flows.hpp"

#include <cmath>
#include <stdexcept>

namespace nsv {

namespace {

TrigPoly cosp(const Angle& a) { return TrigPoly::cosine(a); }
TrigPoly sinp(const Angle& a) { return TrigPoly::sine(a); }

Coeff q(long num, long den = 1) { return Coeff::rat(num, den); }
Coeff rt3(long num, long den = 1) { return Coeff::rt3(num, den); }

/// Axis cycled by s: X(1) -> x_{1+s}, X(2) -> x_{2+s}, X(3) -> x_{3+s} (mod 3).
struct Cycle {
    int s;
    Angle x(int mult, int a) const { return ax(mult, (a - 1 + s) % 3 + 1); }
};

void check_divergence_free(const FlowSpec& f) {
    if (!divergence(f.velocity_profiles()).is_zero())
        throw std::logic_error("flow " + f.name + ": velocity is not divergence-free");
}

void check_rates(const FlowSpec& f) {
    for (const auto& p : f.velocity.profiles) {
        if (p.is_zero()) continue;
        auto k2 = p.uniform_k_norm2();
        if (!k2 || Rational(*k2) != f.velocity.rate)
            throw std::logic_error("flow " + f.name + ": profile is not a Laplacian eigenfield "
                                                      "matching the decay rate");
    }
    if (f.pressure_paper && f.pressure_paper->rate != 2 * f.velocity.rate)
        throw std::logic_error("flow " + f.name + ": pressure rate is not twice velocity rate");
}

FlowSpec finalize(FlowSpec f) {
    check_divergence_free(f);
    check_rates(f);
    return f;
}

}  // namespace

VectorField FlowSpec::velocity_profiles() const {
    if (velocity.profiles.size() != 3)
        throw std::logic_error("flow " + name + ": expected a 3-component velocity");
    return {velocity.profiles[0], velocity.profiles[1], velocity.profiles[2]};
}

VectorField general_velocity_symbolic() {
    VectorField v;
    for (int s = 0; s < 3; ++s) {
        Cycle c{s};
        v[s] = sinp(c.x(1, 1) + xi(1)) * cosp(c.x(1, 2) + xi(2)) * sinp(c.x(1, 3) + xi(3)) -
               sinp(c.x(1, 1) + xi(2)) * cosp(c.x(1, 3) + xi(1)) * sinp(c.x(1, 2) + xi(3));
    }
    return v;
}

VectorField v_axis_independent_reference() {
    VectorField v;
    for (int s = 0; s < 3; ++s) {
        Cycle c{s};
        TrigPoly t;
        t -= q(1, 4) * (cosp(xi(1) - xi(3)) * sinp(xi(2) - xi(3)) * cosp(c.x(2, 2) + xi(2) + xi(1)));
        t -= q(1, 4) * (cosp(xi(1) - xi(3)) * cosp(xi(1) - xi(2)) * sinp(c.x(2, 3) + xi(2) + xi(3)));
        t -= q(1, 4) * (cosp(xi(3) - xi(2)) * cosp(xi(1) - xi(2)) * sinp(c.x(2, 2) + xi(3) + xi(1)));
        t -= q(1, 4) * (cosp(xi(3) - xi(2)) * sinp(xi(1) - xi(3)) * cosp(c.x(2, 3) + xi(1) + xi(2)));
        t += q(1, 4) * (sinp(xi(2) - xi(1)) * sinp(xi(3) - xi(1)) * sinp(c.x(2, 2) + xi(2) + xi(3)));
        t += q(1, 4) * (sinp(xi(2) - xi(1)) * sinp(xi(2) - xi(3)) * sinp(c.x(2, 3) + xi(3) + xi(1)));
        v[s] = t.alpha_scaled(1);
    }
    return v;
}

VectorField w_remainder_reference() {
    VectorField w;
    for (int s = 0; s < 3; ++s) {
        Cycle c{s};
        TrigPoly t;
        t += q(1, 4) * sinp(c.x(2, 1) + xi(1) + xi(1));
        t -= q(1, 4) * (sinp(c.x(2, 1) + xi(1) + xi(1)) * cosp(c.x(2, 3) + xi(3) + xi(3)));
        t += q(1, 4) * sinp(c.x(2, 1) + xi(2) + xi(2));
        t -= q(1, 4) * (sinp(c.x(2, 1) + xi(2) + xi(2)) * cosp(c.x(2, 2) + xi(3) + xi(3)));
        t -= q(1, 2) * (sinp(xi(3) - xi(2)) * sinp(xi(3) - xi(1)) * sinp(c.x(2, 1) + xi(1) + xi(2)));
        t -= q(1, 4) * (sinp(xi(3) - xi(1)) * sinp(c.x(2, 1) + xi(1) + xi(2)) * sinp(c.x(2, 2) + xi(2) + xi(3)));
        t -= q(1, 4) * (sinp(xi(3) - xi(2)) * sinp(c.x(2, 1) + xi(1) + xi(2)) * sinp(c.x(2, 3) + xi(3) + xi(1)));
        t += q(1, 4) * (sinp(xi(2) - xi(3)) * cosp(c.x(2, 1) + xi(3) + xi(1)) * cosp(c.x(2, 2) + xi(1) + xi(2)));
        t += q(1, 4) * (cosp(xi(1) - xi(2)) * cosp(c.x(2, 1) + xi(3) + xi(1)) * sinp(c.x(2, 3) + xi(2) + xi(3)));
        t += q(1, 4) * (cosp(xi(1) - xi(2)) * cosp(c.x(2, 1) + xi(2) + xi(3)) * sinp(c.x(2, 2) + xi(3) + xi(1)));
        t += q(1, 4) * (sinp(xi(1) - xi(3)) * cosp(c.x(2, 1) + xi(2) + xi(3)) * cosp(c.x(2, 3) + xi(1) + xi(2)));
        w[s] = t.alpha_scaled(1);
    }
    return w;
}

namespace {

/// Printed inertial term at the solution phases, cycled like the paper.
VectorField paper_g_printed() {
    VectorField g;
    for (int s = 0; s < 3; ++s) {
        Cycle c{s};
        TrigPoly t;
        t -= q(3, 8) * sinp(c.x(2, 1));
        t -= q(3, 32) * (sinp(c.x(2, 1)) * cosp(c.x(2, 2)));
        t -= q(3, 32) * (sinp(c.x(2, 1)) * cosp(c.x(2, 3)));
        t -= rt3(3, 32) * (cosp(c.x(2, 1)) * cosp(c.x(2, 3)));
        t += rt3(3, 32) * (cosp(c.x(2, 1)) * cosp(c.x(2, 2)));
        t += rt3(3, 32) * (sinp(c.x(2, 1)) * sinp(c.x(2, 2)));
        t -= rt3(3, 32) * (sinp(c.x(2, 1)) * sinp(c.x(2, 3)));
        t += q(3, 32) * (cosp(c.x(2, 1)) * sinp(c.x(2, 3)));
        t += q(3, 32) * (cosp(c.x(2, 1)) * sinp(c.x(2, 2)));
        g[s] = t.alpha_scaled(1);
    }
    return g;
}

}  // namespace

TrigPoly div_g_reference() {
    TrigPoly t;
    t -= q(3, 4) * (cosp(ax(2, 1)) + cosp(ax(2, 2)) + cosp(ax(2, 3)));
    t -= q(3, 8) * (cosp(ax(2, 1)) * cosp(ax(2, 2)));
    t -= q(3, 8) * (cosp(ax(2, 1)) * cosp(ax(2, 3)));
    t += rt3(3, 8) * (sinp(ax(2, 1)) * cosp(ax(2, 3)));
    t -= rt3(3, 8) * (sinp(ax(2, 1)) * cosp(ax(2, 2)));
    t += rt3(3, 8) * (cosp(ax(2, 1)) * sinp(ax(2, 2)));
    t -= rt3(3, 8) * (cosp(ax(2, 1)) * sinp(ax(2, 3)));
    t -= q(3, 8) * (sinp(ax(2, 1)) * sinp(ax(2, 3)));
    t -= q(3, 8) * (sinp(ax(2, 1)) * sinp(ax(2, 2)));
    t -= q(3, 8) * (cosp(ax(2, 2)) * cosp(ax(2, 3)));
    t -= rt3(3, 8) * (sinp(ax(2, 2)) * cosp(ax(2, 3)));
    t += rt3(3, 8) * (cosp(ax(2, 2)) * sinp(ax(2, 3)));
    t -= q(3, 8) * (sinp(ax(2, 2)) * sinp(ax(2, 3)));
    return t.alpha_scaled(2);
}

VectorField paper_compact_profiles() {
    VectorField v;
    for (int s = 0; s < 3; ++s) {
        Cycle c{s};
        TrigPoly t;
        t += cosp(c.x(1, 1)) * sinp(c.x(1, 2) - c.x(1, 3));
        t -= rt3(1, 3) * (sinp(c.x(1, 1)) * sinp(c.x(1, 2) + c.x(1, 3)));
        t -= rt3(2, 3) * (cosp(c.x(1, 1)) * cosp(c.x(1, 2)) * cosp(c.x(1, 3)));
        v[s] = q(3, 4) * t;
    }
    return v;
}

PhaseTriple paper_phases() { return PhaseTriple::of_sixths(-2, 2, 3); }

FlowSpec make_general_family(const PhaseTriple& phases) {
    FlowSpec f;
    f.name = "general_xi";
    f.description = "triple-product family at phases " + phases.str();
    f.phases = phases;
    VectorField sym = general_velocity_symbolic();
    std::vector<TrigPoly> profiles;
    for (const auto& c : sym) profiles.push_back(c.subst_phases(phases));
    f.velocity = DecayField(std::move(profiles), 3);
    return finalize(std::move(f));
}

FlowSpec make_paper_solution() {
    FlowSpec f = make_general_family(paper_phases());
    f.name = "paper_solution";
    f.description = "closed-form solution at phases " + paper_phases().str();

    // The compact profiles must agree exactly with the phase-substituted
    // family; a mismatch means a transcription slip somewhere above.
    VectorField compact = paper_compact_profiles();
    for (int i = 0; i < 3; ++i)
        if (f.velocity.profiles[i] != compact[i])
            throw std::logic_error(
                "paper_solution: compact and phase-substituted profiles differ");

    TrigPoly p;
    p += q(3, 16) * (cosp(ax(2, 1)) + cosp(ax(2, 2)) + cosp(ax(2, 3)));
    p += q(3, 64) * (cosp(ax(2, 1) - ax(2, 2)) + cosp(ax(2, 3) - ax(2, 1)));
    p += rt3(3, 64) * (sinp(ax(2, 1) - ax(2, 2)) + sinp(ax(2, 3) - ax(2, 1)) +
                       sinp(ax(2, 2) - ax(2, 3)) + cosp(ax(2, 3) - ax(2, 2)));
    f.pressure_paper = DecayField({p}, 6);
    f.g_reference = paper_g_printed();
    return finalize(std::move(f));
}

FlowSpec make_taylor() {
    FlowSpec f;
    f.name = "taylor";
    f.description = "planar vortex array, wave number pi";
    f.fixed_alpha = M_PI;
    TrigPoly v1 = sinp(ax(1, 1)) * cosp(ax(1, 2));
    TrigPoly v2 = -(cosp(ax(1, 1)) * sinp(ax(1, 2)));
    f.velocity = DecayField({v1, v2, TrigPoly{}}, 2);

    TrigPoly p = -(q(1, 4) * (cosp(ax(2, 1)) + cosp(ax(2, 2))));
    f.pressure_paper = DecayField({p}, 4);
    f.g_reference = {TrigPoly::sine(ax(2, 1), q(1, 2), 1), TrigPoly::sine(ax(2, 2), q(1, 2), 1),
                     TrigPoly{}};
    return finalize(std::move(f));
}

FlowSpec make_abc(const Coeff& a, const Coeff& b, const Coeff& c) {
    FlowSpec f;
    f.name = "abc";
    f.description = "Arnold-Beltrami-Childress flow, wave number pi";
    f.fixed_alpha = M_PI;
    f.abc_coeffs = {a, b, c};
    TrigPoly v1 = a * sinp(ax(1, 3)) - c * cosp(ax(1, 2));
    TrigPoly v2 = b * sinp(ax(1, 1)) - a * cosp(ax(1, 3));
    TrigPoly v3 = c * sinp(ax(1, 2)) - b * cosp(ax(1, 1));
    f.velocity = DecayField({v1, v2, v3}, 1);

    TrigPoly p = -(b * c * (cosp(ax(1, 1)) * sinp(ax(1, 2))) +
                   a * b * (cosp(ax(1, 3)) * sinp(ax(1, 1))) +
                   a * c * (cosp(ax(1, 2)) * sinp(ax(1, 3))));
    f.pressure_paper = DecayField({p}, 2);

    VectorField g;
    g[0] = (b * c * (sinp(ax(1, 1)) * sinp(ax(1, 2))) -
            a * b * (cosp(ax(1, 1)) * cosp(ax(1, 3))))
               .alpha_scaled(1);
    g[1] = (a * c * (sinp(ax(1, 2)) * sinp(ax(1, 3))) -
            b * c * (cosp(ax(1, 1)) * cosp(ax(1, 2))))
               .alpha_scaled(1);
    g[2] = (a * b * (sinp(ax(1, 1)) * sinp(ax(1, 3))) -
            a * c * (cosp(ax(1, 2)) * cosp(ax(1, 3))))
               .alpha_scaled(1);
    f.g_reference = g;
    return finalize(std::move(f));
}

FlowSpec make_antuono(const Coeff& v0) {
    FlowSpec f = make_paper_solution();
    f.name = "antuono";
    f.description = "helicity-normalized variant: paper profiles scaled by 4√2/(3√3) v0";
    f.pressure_paper.reset();  // not printed for this variant
    f.g_reference.reset();
    f.v0 = v0;
    // 4√2/(3√3) lies outside Q(√3); keep the linear factor numeric and the
    // exact square 32/27 for quadratic (energy) checks.
    f.linear_scale = 4.0 * std::sqrt(2.0) / (3.0 * std::sqrt(3.0)) * v0.to_double();
    f.scale_sq = Coeff::rat(32, 27) * v0 * v0;
    return f;
}

std::vector<std::string> flow_names() {
    return {"paper_solution", "taylor", "abc", "antuono", "general_xi"};
}

FlowSpec make_flow(const std::string& name, const FlowParams& params) {
    if (name == "paper_solution") return make_paper_solution();
    if (name == "taylor") return make_taylor();
    if (name == "abc") return make_abc(params.abc_a, params.abc_b, params.abc_c);
    if (name == "antuono") return make_antuono(params.v0);
    if (name == "general_xi") {
        if (!params.phases)
            throw std::invalid_argument("general_xi requires phases (--xi n1,n2,n3 in pi/6 units)");
        return make_general_family(*params.phases);
    }
    throw std::invalid_argument("unknown flow: " + name);
}

}  // namespace nsv
