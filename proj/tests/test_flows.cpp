#include <doctest.h>

#include <cmath>

#include "nsverify/analysis.hpp"
#include "nsverify/flows.hpp"

using namespace nsv;

namespace {
Coeff q(long n, long d = 1) { return Coeff::rat(n, d); }
}  // namespace

TEST_SUITE("flows") {

TEST_CASE("catalog constructs and every velocity is exactly solenoidal") {
    for (const auto& name : flow_names()) {
        FlowParams params;
        params.phases = PhaseTriple::of_sixths(1, -4, 2);
        FlowSpec f = make_flow(name, params);
        CHECK(divergence(f.velocity_profiles()).is_zero());
    }
    CHECK_THROWS_AS(make_flow("no_such_flow"), std::invalid_argument);
    CHECK_THROWS_AS(make_flow("general_xi"), std::invalid_argument);  // phases required
}

TEST_CASE("decay rates and shared Laplacian eigenvalues") {
    CHECK(make_paper_solution().velocity.rate == 3);
    CHECK(make_paper_solution().pressure_paper->rate == 6);
    CHECK(make_taylor().velocity.rate == 2);
    CHECK(make_taylor().pressure_paper->rate == 4);
    CHECK(make_abc(q(1), q(1), q(1)).velocity.rate == 1);
    CHECK(make_abc(q(1), q(1), q(1)).pressure_paper->rate == 2);
    CHECK(make_antuono(q(1)).velocity.rate == 3);

    for (const auto& p : make_paper_solution().velocity.profiles)
        CHECK(*p.uniform_k_norm2() == 3);
    for (const auto& p : make_taylor().velocity.profiles)
        if (!p.is_zero()) CHECK(*p.uniform_k_norm2() == 2);
}

TEST_CASE("compact and phase-substituted profiles are identical") {
    VectorField sym = general_velocity_symbolic();
    VectorField compact = paper_compact_profiles();
    for (int i = 0; i < 3; ++i) CHECK(sym[i].subst_phases(paper_phases()) == compact[i]);
}

TEST_CASE("general family at zero phases matches the direct substitution") {
    FlowSpec f = make_general_family(PhaseTriple::of_sixths(0, 0, 0));
    TrigPoly expect = TrigPoly::sine(ax(1, 1)) * TrigPoly::cosine(ax(1, 2)) *
                          TrigPoly::sine(ax(1, 3)) -
                      TrigPoly::sine(ax(1, 1)) * TrigPoly::cosine(ax(1, 3)) *
                          TrigPoly::sine(ax(1, 2));
    CHECK(f.velocity.profiles[0] == expect);
}

TEST_CASE("planar vortex profiles") {
    FlowSpec f = make_taylor();
    CHECK(f.velocity.profiles[0] ==
          TrigPoly::sine(ax(1, 1)) * TrigPoly::cosine(ax(1, 2)));
    CHECK(f.velocity.profiles[1] ==
          -(TrigPoly::cosine(ax(1, 1)) * TrigPoly::sine(ax(1, 2))));
    CHECK(f.velocity.profiles[2].is_zero());
    CHECK(f.fixed_alpha == doctest::Approx(M_PI));
}

TEST_CASE("abc flow with zero coefficients is the zero field") {
    FlowSpec f = make_abc(q(0), q(0), q(0));
    for (const auto& p : f.velocity.profiles) CHECK(p.is_zero());
    CHECK(kinetic_energy_mean(f).mean_per_grade.empty());
}

TEST_CASE("helicity-normalized variant: exact quadratic scale") {
    FlowSpec f = make_antuono(q(1));
    // profiles themselves are the unscaled ones
    CHECK(f.velocity.profiles[0] == make_paper_solution().velocity.profiles[0]);
    CHECK(f.scale_sq == q(32, 27));
    CHECK(f.linear_scale ==
          doctest::Approx(4.0 * std::sqrt(2.0) / (3.0 * std::sqrt(3.0))).epsilon(1e-15));
    // mean kinetic energy per unit mass is exactly 1/2 after scaling
    EnergyResult e = kinetic_energy_mean(f);
    REQUIRE(e.mean_per_grade.size() == 1);
    CHECK(e.mean_per_grade.at(0) == q(1, 2));
    CHECK(e.decay_rate == 6);

    FlowSpec f2 = make_antuono(q(2));
    CHECK(kinetic_energy_mean(f2).mean_per_grade.at(0) == q(2));
}

TEST_CASE("printed inertial reference forms match the derivation") {
    // stored verbatim and derived independently, so they check each other
    for (const auto& name : {"paper_solution", "taylor"}) {
        FlowSpec f = make_flow(name);
        VectorField g = compute_inertial(f.velocity_profiles());
        for (int i = 0; i < 3; ++i) CHECK(g[i] == (*f.g_reference)[i]);
    }
    FlowSpec abc = make_abc(q(2), q(-3), q(5));
    VectorField g = compute_inertial(abc.velocity_profiles());
    for (int i = 0; i < 3; ++i) CHECK(g[i] == (*abc.g_reference)[i]);
}

}  // TEST_SUITE
