#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "nsverify/analysis.hpp"
#include "nsverify/flows.hpp"
#include "nsverify/spectral.hpp"
#include "test_support.hpp"

using namespace nsv;

TEST_SUITE("spectral") {

TEST_CASE("grid sampling: spot value, band-limited divergence, decay bound") {
    FlowSpec paper = make_paper_solution();
    GridField f = grid_sample(paper, 32, 0.0, 1.0, 0.05);
    double s3 = std::sqrt(3.0) / 2.0;
    for (int c = 0; c < 3; ++c)
        CHECK(f.component(c)[0] == doctest::Approx(-s3).epsilon(1e-14));

    CHECK(max_divergence(f) <= 1e-12);

    // after many decay times the field norm is below the decay envelope
    double t = 10.0 / (3.0 * 0.05);
    GridField late = grid_sample(paper, 32, t, 1.0, 0.05);
    GridField profile = sample_profiles(paper.velocity_profiles(), 32, 1.0);
    CHECK(l2_norm(late) <= std::exp(-3.0 * 0.05 * t) * l2_norm(profile) + 1e-12);
}

TEST_CASE("Leray projector: annihilates gradients, detects the off-condition field") {
    FlowSpec paper = make_paper_solution();
    VectorField g = compute_inertial(paper.velocity_profiles());
    GridField gf = sample_profiles(g, 32, 1.0);
    CHECK(max_abs(leray_project(gf)) <= 1e-12 * max_abs(gf));

    // random band-limited gradient
    nsv::testing::PolyGen gen(17);
    TrigPoly phi = gen.spatial_scalar(5);
    VectorField grad{phi.diff(1), phi.diff(2), phi.diff(3)};
    GridField gradf = sample_profiles(grad, 32, 1.0);
    if (max_abs(gradf) > 0) CHECK(max_abs(leray_project(gradf)) <= 1e-12 * max_abs(gradf));

    // off-condition family: the exact symbolic remainder sets the scale
    FlowSpec off = make_general_family(PhaseTriple::of_sixths(0, 0, 0));
    VectorField goff = compute_inertial(off.velocity_profiles());
    GridField gofff = sample_profiles(goff, 32, 1.0);
    GridField rem = leray_project(gofff);
    CHECK(max_abs(rem) >= 1e-3 * max_abs(gofff));
    // and the numeric remainder agrees with the exact one pointwise
    GridField exact_rem = sample_profiles(leray_remainder_exact(goff), 32, 1.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < rem.data.size(); ++i)
        worst = std::max(worst, std::abs(rem.data[i] - exact_rem.data[i]));
    CHECK(worst <= 1e-12);
}

TEST_CASE("projector idempotence and mean-mode passthrough") {
    nsv::testing::PolyGen gen(23);
    VectorField v{gen.spatial_scalar(4), gen.spatial_scalar(4), gen.spatial_scalar(4)};
    GridField f = sample_profiles(v, 32, 1.0);
    for (auto& x : f.data) x += 0.25;  // constant mode must pass through
    GridField p1 = leray_project(f);
    GridField p2 = leray_project(p1);
    double worst = 0.0;
    for (std::size_t i = 0; i < p1.data.size(); ++i)
        worst = std::max(worst, std::abs(p1.data[i] - p2.data[i]));
    CHECK(worst <= 1e-13);

    double mean = 0.0;
    for (std::size_t i = 0; i < p1.n3(); ++i) mean += p1.component(0)[i];
    CHECK(mean / double(p1.n3()) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("short evolution stays on the closed form") {
    FlowSpec paper = make_paper_solution();
    GridField v0 = grid_sample(paper, 32, 0.0, 1.0, 0.05);
    std::vector<double> energies;
    GridField vT = evolve(v0, {5e-3, 0.25, 10}, [&](const GridField& s) {
        energies.push_back(grid_energy(s));
    });
    GridField ref = grid_sample(paper, 32, vT.t, 1.0, 0.05);
    CHECK(l2_relative_error(vT, ref) <= 1e-10);
    CHECK(max_divergence(vT) <= 1e-12);
    for (std::size_t i = 1; i < energies.size(); ++i) CHECK(energies[i] <= energies[i - 1]);

    // t_final = 0: single callback, zero error
    int calls = 0;
    GridField v0b = evolve(v0, {5e-3, 0.0, 10}, [&](const GridField&) { ++calls; });
    CHECK(calls == 1);
    CHECK(l2_relative_error(v0b, v0) == 0.0);
}

TEST_CASE("planar vortex evolution matches its closed form on the slice") {
    FlowSpec taylor = make_taylor();
    GridField v0 = grid_sample(taylor, 32, 0.0, 1.0, 0.05);
    GridField vT = evolve(v0, {5e-4, 0.1, 1000000});
    GridField ref = grid_sample(taylor, 32, vT.t, 1.0, 0.05);
    CHECK(l2_relative_error(vT, ref) <= 1e-10);
}

TEST_CASE("fourth-order self-convergence on a genuinely nonlinear trajectory") {
    FlowSpec off = make_general_family(PhaseTriple::of_sixths(0, 0, 0));
    GridField v0 = grid_sample(off, 32, 0.0, 1.0, 0.05);
    const double T = 0.5;
    GridField ref = evolve(v0, {5e-4, T, 1000000});
    double e1 = l2_relative_error(evolve(v0, {8e-3, T, 1000000}), ref);
    double e2 = l2_relative_error(evolve(v0, {4e-3, T, 1000000}), ref);
    double ratio = e1 / e2;
    CHECK(ratio >= 8.0);
    CHECK(ratio <= 32.0);
}

TEST_CASE("deviation probe") {
    // on condition: the trajectory never leaves the diffusion curve
    FlowSpec paper = make_paper_solution();
    DeviationProbe on = deviation_probe(paper, 32, 1.0, 0.05, {5e-3, 1.0, 40});
    for (const auto& [t, dev] : on.curve) CHECK(dev <= 1e-6);
    CHECK(on.initial_rate_exact == 0.0);

    // off condition: short-time growth matches the exact instantaneous
    // defect ||U(0)||/||V|| (= 1/2 for the zero-phase family) within 10%
    FlowSpec off = make_general_family(PhaseTriple::of_sixths(0, 0, 0));
    DeviationProbe probe = deviation_probe(off, 32, 1.0, 0.05, {5e-3, 0.4, 4});
    CHECK(probe.initial_rate_exact == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(probe.initial_rate_measured / probe.initial_rate_exact - 1.0) <= 0.1);
    CHECK(probe.curve.back().second >= 1e-3);

    // stronger viscosity damps the deviation (trend only)
    DeviationProbe nu_small = deviation_probe(off, 32, 1.0, 0.05, {2e-4, 0.05, 50});
    DeviationProbe nu_large = deviation_probe(off, 32, 1.0, 10.0, {2e-4, 0.05, 50});
    CHECK(nu_large.curve.back().second < nu_small.curve.back().second);
}

TEST_CASE("resolution independence on band-limited flows") {
    FlowSpec paper = make_paper_solution();
    GridField a16 = evolve(grid_sample(paper, 16, 0.0, 1.0, 0.05), {5e-3, 0.5, 1000000});
    GridField a32 = evolve(grid_sample(paper, 32, 0.0, 1.0, 0.05), {5e-3, 0.5, 1000000});
    double worst = 0.0;
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j)
                for (int k = 0; k < 16; ++k)
                    worst = std::max(worst,
                                     std::abs(a16.component(c)[a16.index(i, j, k)] -
                                              a32.component(c)[a32.index(2 * i, 2 * j, 2 * k)]));
    CHECK(worst <= 1e-10);
}

TEST_CASE("stability guards") {
    FlowSpec paper = make_paper_solution();
    GridField v0 = grid_sample(paper, 32, 0.0, 1.0, 0.05);
    CHECK_THROWS_AS(evolve(v0, {0.5, 1.0, 10}), EvolveError);  // violates CFL
    CHECK_THROWS_AS(evolve(v0, {-1.0, 1.0, 10}), EvolveError);
}

TEST_CASE("checkpoint round trip") {
    FlowSpec abc = make_abc(Coeff(1), Coeff(2), Coeff(1));
    GridField f = grid_sample(abc, 16, 0.125, 1.0, 0.3);
    std::string path = "checkpoint_test.bin";
    write_checkpoint(path, f);
    GridField g = read_checkpoint(path);
    std::remove(path.c_str());
    CHECK(g.n == f.n);
    CHECK(g.alpha == f.alpha);
    CHECK(g.kappa == f.kappa);
    CHECK(g.t == f.t);
    REQUIRE(g.data.size() == f.data.size());
    CHECK(g.data == f.data);
}

TEST_CASE("grid helicity agrees with the exact mean") {
    FlowSpec abc = make_abc(Coeff(1), Coeff(1), Coeff(1));
    GridField f = grid_sample(abc, 32, 0.0, 1.0, 0.05);
    // exact: -(a^2+b^2+c^2) pi = -3 pi at the bound wave number
    CHECK(grid_helicity(f) == doctest::Approx(-3.0 * M_PI).epsilon(1e-12));

    FlowSpec paper = make_paper_solution();
    GridField p = grid_sample(paper, 32, 0.0, 1.0, 0.05);
    CHECK(grid_helicity(p) ==
          doctest::Approx(std::sqrt(3.0) * 27.0 / 32.0).epsilon(1e-12));
}

}  // TEST_SUITE
