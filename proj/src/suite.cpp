#include "nsverify/suite.hpp"

#include <sstream>

#include "nsverify/analysis.hpp"
#include "nsverify/spectral.hpp"

namespace nsv {

namespace {

std::string coeff_map_str(const std::map<int, Coeff>& m) {
    if (m.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : m) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (p == 1) os << " a";
        if (p > 1) os << " a^" << p;
    }
    return os.str();
}

CheckEntry exact_check(std::string id, const TrigPoly& residual, std::string notes = "") {
    CheckEntry e;
    e.id = std::move(id);
    e.mode = CheckEntry::Mode::exact;
    e.pass = residual.is_zero();
    if (!e.pass) e.witness = residual;
    e.notes = std::move(notes);
    return e;
}

CheckEntry exact_vector_check(std::string id, const VectorField& residual,
                              std::string notes = "") {
    TrigPoly first_nonzero;
    for (const auto& r : residual)
        if (!r.is_zero()) {
            first_nonzero = r;
            break;
        }
    return exact_check(std::move(id), first_nonzero, std::move(notes));
}

}  // namespace

bool VerificationReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

const CheckEntry* VerificationReport::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json c;
        c["id"] = e.id;
        c["mode"] = e.mode == CheckEntry::Mode::exact ? "exact" : "numeric";
        c["status"] = e.pass ? "pass" : "fail";
        c["witness"] = e.witness ? e.witness->to_json() : nlohmann::json(nullptr);
        c["max_abs_error"] = e.max_abs_error ? nlohmann::json(*e.max_abs_error)
                                             : nlohmann::json(nullptr);
        c["threshold"] = e.threshold ? nlohmann::json(*e.threshold) : nlohmann::json(nullptr);
        c["notes"] = e.notes;
        checks.push_back(std::move(c));
    }
    return {{"schema", "nsverify-report-v1"},
            {"flow", flow},
            {"checks", std::move(checks)},
            {"passed", all_pass()}};
}

VerificationReport run_verification(const FlowSpec& flow, const VerifyOptions& opt) {
    VerificationReport rep;
    rep.flow = flow.name;
    const double alpha = flow.fixed_alpha.value_or(opt.alpha);

    VectorField v = flow.velocity_profiles();
    VectorField g = compute_inertial(v);

    rep.entries.push_back(exact_check("divergence_free", divergence(v)));

    {
        // Profiles must be Laplacian eigenfields matching the decay rate:
        // lap v + r alpha^2 v = 0, which is the structural form of the
        // decay law e^{-r a^2 kappa t}.
        Coeff r{Rational(flow.velocity.rate)};
        VectorField res;
        for (int i = 0; i < 3; ++i) res[i] = v[i].laplacian() + v[i].scaled(r).alpha_scaled(2);
        rep.entries.push_back(exact_vector_check(
            "decay_structure", res, "velocity rate " + rational_str(flow.velocity.rate) +
                                        (flow.pressure_paper
                                             ? ", pressure rate " +
                                                   rational_str(flow.pressure_paper->rate)
                                             : "")));
    }

    if (flow.g_reference) {
        VectorField diff;
        for (int i = 0; i < 3; ++i) diff[i] = g[i] - (*flow.g_reference)[i];
        rep.entries.push_back(exact_vector_check("inertial_matches_printed", diff));
    } else if (flow.phases) {
        // General family: the printed axis-independent and remainder parts,
        // phase-substituted, must reproduce the derived inertial term.
        VectorField vref = v_axis_independent_reference();
        VectorField wref = w_remainder_reference();
        VectorField diff;
        for (int i = 0; i < 3; ++i)
            diff[i] = g[i] - vref[i].subst_phases(*flow.phases) -
                      wref[i].subst_phases(*flow.phases);
        rep.entries.push_back(exact_vector_check("inertial_matches_printed", diff));
    }

    if (flow.name == "paper_solution")
        rep.entries.push_back(
            exact_check("div_inertial_matches_printed", divergence(g) - div_g_reference()));

    {
        VectorField vparts;
        for (int i = 0; i < 3; ++i) {
            Split s = split_axis_independent(g[i], i + 1);
            vparts[i] = s.axis_independent;
            if (s.axis_independent + s.remainder != g[i])
                throw std::logic_error("split components do not recombine");
        }
        rep.entries.push_back(exact_vector_check("phase_condition_v_zero", vparts));
    }

    GradientCheck grad = gradient_condition_check(g);
    {
        CheckEntry e;
        e.id = "gradient_condition";
        e.pass = grad.pass;
        if (!grad.pass) e.witness = grad.witness;
        e.notes = grad.detail;
        rep.entries.push_back(e);
    }

    std::optional<TrigPoly> p_rec;
    {
        CheckEntry e;
        e.id = "pressure_reconstruction";
        if (grad.pass) {
            p_rec = reconstruct_pressure(g, opt.rho);
            e.pass = true;
        } else {
            e.pass = false;
            e.notes = "skipped: gradient condition failed, no periodic pressure exists";
        }
        rep.entries.push_back(e);
    }

    if (flow.pressure_paper) {
        CheckEntry e;
        e.id = "pressure_matches_printed";
        if (p_rec) {
            // Printed pressures are stored per unit density; compare on the
            // same footing.
            TrigPoly p_unit = reconstruct_pressure(g, Coeff(1));
            PressureMatch m = compare_pressure(p_unit, flow.pressure_paper->profiles[0]);
            e.pass = m.matched;
            if (m.matched) {
                e.notes = "s = " + std::string(m.sign > 0 ? "+1" : "-1") +
                          ", offset = " + coeff_map_str(m.offset.constant_mode());
            } else {
                e.witness = m.residual;
            }
        } else {
            e.pass = false;
            e.notes = "skipped: no reconstructed pressure";
        }
        rep.entries.push_back(e);
    }

    {
        CheckEntry e;
        e.id = "momentum_residual";
        if (p_rec) {
            DecayField pressure({*p_rec}, 2 * flow.velocity.rate);
            MomentumResidual mr = momentum_residual(flow, pressure, opt.rho);
            bool linear_zero = true, pressure_zero = true;
            for (int i = 0; i < 3; ++i) {
                linear_zero = linear_zero && mr.linear[i].is_zero();
                pressure_zero = pressure_zero && mr.pressure[i].is_zero();
            }
            e.pass = mr.all_zero();
            if (!e.pass) {
                for (int i = 0; i < 3; ++i)
                    if (!mr.linear[i].is_zero() || !mr.pressure[i].is_zero()) {
                        e.witness = mr.linear[i].is_zero() ? mr.pressure[i] : mr.linear[i];
                        break;
                    }
            }
            e.notes = std::string("viscous group ") + (linear_zero ? "zero" : "nonzero") +
                      ", pressure group " + (pressure_zero ? "zero" : "nonzero");
        } else {
            e.pass = false;
            e.notes = "skipped: no reconstructed pressure";
        }
        rep.entries.push_back(e);
    }

    {
        EnergyResult energy = kinetic_energy_mean(flow);
        CheckEntry e;
        e.id = "energy_mean";
        e.notes = "mean kinetic energy per unit mass at t = 0: " +
                  coeff_map_str(energy.mean_per_grade) + ", decays as exp(-" +
                  rational_str(energy.decay_rate) + " a^2 kappa t)";
        std::optional<Coeff> expected;
        if (flow.name == "paper_solution") expected = Coeff::rat(27, 64);
        if (flow.name == "taylor") expected = Coeff::rat(1, 4);
        if (flow.name == "abc" && flow.abc_coeffs) {
            const auto& [a, b, c] = *flow.abc_coeffs;
            expected = Coeff::rat(1, 2) * (a * a + b * b + c * c);
        }
        if (flow.name == "antuono" && flow.v0) expected = Coeff::rat(1, 2) * *flow.v0 * *flow.v0;
        if (expected) {
            bool single_grade =
                energy.mean_per_grade.size() == (expected->is_zero() ? 0 : 1);
            e.pass = expected->is_zero()
                         ? energy.mean_per_grade.empty()
                         : single_grade && energy.mean_per_grade.count(0) &&
                               energy.mean_per_grade.at(0) == *expected;
            e.notes += "; expected " + expected->str();
        } else {
            e.pass = true;  // recorded, no closed-form value pinned
        }
        e.pass = e.pass && energy.decay_rate == 2 * flow.velocity.rate;
        rep.entries.push_back(e);
    }

    {
        BeltramiResult belt = beltrami_check(
            v, {Coeff::rt3(1), Coeff::rt3(-1), Coeff::rat(1), Coeff::rat(-1)});
        CheckEntry e;
        e.id = "beltrami";
        e.notes = belt.lambda ? "curl v = (" + belt.lambda->str() + ") a v"
                              : "not a Beltrami field";
        e.notes += "; mean helicity = " + coeff_map_str(belt.mean_helicity);
        if (flow.name == "paper_solution" || flow.name == "antuono")
            e.pass = belt.lambda && (*belt.lambda * *belt.lambda == Coeff::rat(3));
        else if (flow.name == "abc")
            e.pass = belt.lambda && *belt.lambda == Coeff::rat(-1);
        else if (flow.name == "taylor")
            e.pass = !belt.lambda && belt.mean_helicity.empty();
        else
            e.pass = true;  // general family: structure recorded, not asserted
        rep.entries.push_back(e);
    }

    if (opt.numeric_checks) {
        GridField gf = sample_profiles(g, opt.grid_n, alpha);
        GridField remainder = leray_project(gf);
        double scale = max_abs(gf);
        double rel = scale > 0.0 ? max_abs(remainder) / scale : max_abs(remainder);
        CheckEntry e;
        e.id = "leray_numeric";
        e.mode = CheckEntry::Mode::numeric;
        e.max_abs_error = rel;
        e.threshold = opt.leray_tolerance;
        e.pass = rel <= opt.leray_tolerance;
        e.notes = "max|leray remainder| / max|g| on a " + std::to_string(opt.grid_n) + "^3 grid";
        rep.entries.push_back(e);
    }

    return rep;
}

}  // namespace nsv
