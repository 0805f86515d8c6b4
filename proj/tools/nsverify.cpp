// Batch front end: catalog listing, verification suites, pseudo-spectral
// evolution runs, phase scans, quadrature sweeps and field sampling.
//
// Exit codes: 0 all checks passed, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

#include "nsverify/analysis.hpp"
#include "nsverify/flows.hpp"
#include "nsverify/quadrature.hpp"
#include "nsverify/spectral.hpp"
#include "nsverify/suite.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonFlowArgs {
    std::string flow;
    std::vector<long> xi_sixths;
    std::vector<double> abc = {1.0, 1.0, 1.0};
    double v0 = 1.0;
};

void add_flow_options(CLI::App* cmd, CommonFlowArgs& args) {
    cmd->add_option("flow", args.flow, "catalog flow name")->required();
    cmd->add_option("--xi", args.xi_sixths,
                    "general_xi phases as three integers in pi/6 units, e.g. --xi -2 2 3")
        ->expected(3);
    cmd->add_option("--abc", args.abc, "a b c coefficients for the abc flow")->expected(3);
    cmd->add_option("--v0", args.v0, "reference velocity for the antuono flow");
}

nsv::Coeff coeff_from_double(double v, const std::string& what) {
    double r = std::round(v);
    if (std::abs(v - r) > 1e-12 || std::abs(r) > 1e15)
        throw CLI::ValidationError(what + " must be an integer (exact arithmetic)");
    return nsv::Coeff::rat(long(r));
}

nsv::FlowSpec build_flow(const CommonFlowArgs& args) {
    nsv::FlowParams params;
    if (!args.xi_sixths.empty())
        params.phases =
            nsv::PhaseTriple::of_sixths(args.xi_sixths[0], args.xi_sixths[1], args.xi_sixths[2]);
    params.abc_a = coeff_from_double(args.abc[0], "--abc");
    params.abc_b = coeff_from_double(args.abc[1], "--abc");
    params.abc_c = coeff_from_double(args.abc[2], "--abc");
    params.v0 = coeff_from_double(args.v0, "--v0");
    return nsv::make_flow(args.flow, params);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << text;
}

int cmd_list() {
    for (const auto& name : nsv::flow_names()) {
        nsv::FlowParams params;
        params.phases = nsv::paper_phases();
        nsv::FlowSpec f = nsv::make_flow(name, params);
        std::cout << name << "  -  " << f.description << "\n";
    }
    return kExitPass;
}

int cmd_verify(const CommonFlowArgs& args, const nsv::VerifyOptions& opt,
               const std::string& out) {
    nsv::FlowSpec flow = build_flow(args);
    nsv::VerificationReport report = nsv::run_verification(flow, opt);
    write_text(out, report.to_json().dump(2) + "\n");
    if (!out.empty() && out != "-") {
        for (const auto& e : report.entries)
            std::cout << (e.pass ? "pass  " : "FAIL  ") << e.id << "\n";
    }
    std::cout << (report.all_pass() ? "all checks passed" : "verification FAILED") << " for "
              << flow.name << "\n";
    return report.all_pass() ? kExitPass : kExitFail;
}

struct EvolveArgs {
    CommonFlowArgs flow;
    int n = 32;
    double alpha = 1.0;
    double kappa = 0.05;
    double dt = 5e-3;
    double t_final = std::log(2.0) / (3 * 0.05);  // ln2 / (3 kappa)
    bool t_final_set = false;
    int output_every = 20;
    std::string out;
    std::string summary;
};

int cmd_evolve(const EvolveArgs& args) {
    nsv::FlowSpec flow = build_flow(args.flow);
    const double alpha = flow.fixed_alpha.value_or(args.alpha);
    double t_final = args.t_final_set ? args.t_final : std::log(2.0) / (3.0 * args.kappa);

    nsv::GridField v0 = nsv::grid_sample(flow, args.n, 0.0, alpha, args.kappa);
    nsv::GridField ref0 = nsv::sample_profiles(flow.velocity_profiles(), args.n, alpha,
                                               flow.linear_scale);

    std::ostringstream csv;
    csv << "t,L2_error,energy,helicity,max_div\n";
    csv.precision(12);

    double energy0 = nsv::grid_energy(v0);
    double final_error = 0.0, final_energy = energy0, max_div_seen = 0.0;

    nsv::EvolveConfig cfg;
    cfg.dt = args.dt;
    cfg.t_final = t_final;
    cfg.output_every = args.output_every;
    try {
        nsv::evolve(v0, cfg, [&](const nsv::GridField& state) {
            double decay = flow.velocity.decay_factor(state.t, alpha, args.kappa);
            nsv::GridField closed = ref0;
            for (auto& x : closed.data) x *= decay;
            closed.t = state.t;
            double err = nsv::l2_relative_error(state, closed);
            double energy = nsv::grid_energy(state);
            double hel = nsv::grid_helicity(state);
            double div = nsv::max_divergence(state);
            csv << state.t << "," << err << "," << energy << "," << hel << "," << div << "\n";
            final_error = err;
            final_energy = energy;
            max_div_seen = std::max(max_div_seen, div);
        });
    } catch (const nsv::EvolveError& e) {
        std::cerr << "evolution aborted: " << e.what() << "\n";
        return kExitFail;
    }

    write_text(args.out, csv.str());

    json summary = {{"flow", flow.name},
                    {"n", args.n},
                    {"alpha", alpha},
                    {"kappa", args.kappa},
                    {"dt", args.dt},
                    {"t_final", t_final},
                    {"final_L2_error", final_error},
                    {"energy_ratio", final_energy / energy0},
                    {"max_divergence", max_div_seen}};
    write_text(args.summary, summary.dump(2) + "\n");
    return kExitPass;
}

int cmd_scan_phases(const std::string& out) {
    std::vector<nsv::PhaseTriple> hits = nsv::phase_condition_scan();
    json arr = json::array();
    for (const auto& p : hits)
        arr.push_back({{"sixths", p.sixths}, {"angles", p.str()}});
    json doc = {{"schema", "nsverify-phase-scan-v1"},
                {"lattice", "pi/6 steps over (-5pi/6..pi)^3"},
                {"candidates", 12 * 12 * 12},
                {"solutions", std::move(arr)}};
    write_text(out, doc.dump(2) + "\n");
    return kExitPass;
}

int cmd_quadrature(const std::string& out, double tolerance) {
    std::vector<nsv::QuadResult> results = nsv::default_sweep();
    std::ostringstream csv;
    csv << "identity,tau,alpha,x,computed,reference,rel_err,est_abs_err\n";
    csv.precision(15);
    bool ok = true;
    for (const auto& r : results) {
        csv << nsv::identity_name(r.id) << "," << r.tau << "," << r.alpha << "," << r.x << ","
            << r.computed << "," << r.reference << "," << r.rel_err << "," << r.est_abs_err
            << "\n";
        ok = ok && r.rel_err <= tolerance;
    }
    write_text(out, csv.str());
    double consistency = nsv::c2_c3_consistency();
    std::cout << "sweep of " << results.size() << " points: "
              << (ok ? "all within " : "NOT within ") << tolerance
              << "; C2/C3 closed-form consistency " << consistency << "\n";
    return ok && consistency <= 1e-12 ? kExitPass : kExitFail;
}

struct SampleArgs {
    CommonFlowArgs flow;
    int n = 32;
    double t = 0.0;
    double alpha = 1.0;
    double kappa = 0.05;
    std::string out;
};

int cmd_sample(const SampleArgs& args) {
    nsv::FlowSpec flow = build_flow(args.flow);
    double alpha = flow.fixed_alpha.value_or(args.alpha);
    nsv::GridField f = nsv::grid_sample(flow, args.n, args.t, alpha, args.kappa);
    nsv::write_checkpoint(args.out, f);
    std::cout << "wrote " << args.out << " (n = " << f.n << ", t = " << f.t << ")\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical verification of closed-form periodic "
                 "Navier-Stokes solutions"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "list the flow catalog");

    CommonFlowArgs verify_args;
    nsv::VerifyOptions verify_opt;
    std::string verify_out;
    double verify_rho = 1.0;
    auto* verify = app.add_subcommand("verify", "run the verification suite for a flow");
    add_flow_options(verify, verify_args);
    verify->add_option("--alpha", verify_opt.alpha, "wave number (free flows only)");
    verify->add_option("--kappa", verify_opt.kappa, "kinematic viscosity");
    verify->add_option("--rho", verify_rho, "fluid density (integer; exact arithmetic)");
    verify->add_option("--n", verify_opt.grid_n, "grid size for the numeric Leray check");
    verify->add_option("--out", verify_out, "write the JSON report here ('-' for stdout)");

    EvolveArgs evolve_args;
    auto* evolve = app.add_subcommand("evolve", "pseudo-spectral evolution vs closed form");
    add_flow_options(evolve, evolve_args.flow);
    evolve->add_option("--n", evolve_args.n, "grid points per axis");
    evolve->add_option("--alpha", evolve_args.alpha, "wave number (free flows only)");
    evolve->add_option("--kappa", evolve_args.kappa, "kinematic viscosity");
    evolve->add_option("--dt", evolve_args.dt, "time step");
    auto* tf = evolve->add_option("--t-final", evolve_args.t_final,
                                  "end time (default ln2/(3 kappa))");
    evolve->add_option("--output-every", evolve_args.output_every, "steps between CSV rows");
    evolve->add_option("--out", evolve_args.out, "trajectory CSV path ('-' for stdout)");
    evolve->add_option("--summary", evolve_args.summary, "summary JSON path ('-' for stdout)");

    std::string scan_out;
    auto* scan = app.add_subcommand("scan-phases", "scan the pi/6 phase lattice for solutions");
    scan->add_option("--out", scan_out, "JSON output path ('-' for stdout)");

    std::string quad_out;
    double quad_tol = 1e-10;
    auto* quad = app.add_subcommand("quadrature", "verify the heat-kernel integral identities");
    quad->add_option("--out", quad_out, "CSV output path ('-' for stdout)");
    quad->add_option("--tolerance", quad_tol, "relative error bound");

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "sample a flow into a binary checkpoint");
    add_flow_options(sample, sample_args.flow);
    sample->add_option("--n", sample_args.n, "grid points per axis");
    sample->add_option("--t", sample_args.t, "sample time");
    sample->add_option("--alpha", sample_args.alpha, "wave number (free flows only)");
    sample->add_option("--kappa", sample_args.kappa, "kinematic viscosity");
    sample->add_option("--out", sample_args.out, "checkpoint path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (list->parsed()) return cmd_list();
        if (verify->parsed()) {
            verify_opt.rho = coeff_from_double(verify_rho, "--rho");
            return cmd_verify(verify_args, verify_opt, verify_out);
        }
        if (evolve->parsed()) {
            evolve_args.t_final_set = tf->count() > 0;
            return cmd_evolve(evolve_args);
        }
        if (scan->parsed()) return cmd_scan_phases(scan_out);
        if (quad->parsed()) return cmd_quadrature(quad_out, quad_tol);
        if (sample->parsed()) return cmd_sample(sample_args);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
