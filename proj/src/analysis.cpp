#include "nsverify/analysis.hpp"

#include <cmath>
#include <set>

#include "nsverify/parallel.hpp"

namespace nsv {

VectorField compute_inertial(const VectorField& v) {
    VectorField g;
    for (int i = 0; i < 3; ++i) {
        TrigPoly gi;
        for (int j = 0; j < 3; ++j) gi += v[j] * v[i].diff(j + 1);
        g[i] = gi;
    }
    return g;
}

Split split_axis_independent(const TrigPoly& g_i, int axis) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("split: axis out of range");
    Split s;
    for (const auto& [tk, t] : g_i.terms()) {
        TrigPoly term = TrigPoly::cosine(Angle{tk.key}, t.ccos, tk.alpha_power) +
                        TrigPoly::sine(Angle{tk.key}, t.csin, tk.alpha_power);
        if (tk.key.k[axis - 1] == 0)
            s.axis_independent += term;
        else
            s.remainder += term;
    }
    return s;
}

GradientCheck gradient_condition_check(const VectorField& g) {
    GradientCheck r;
    for (int i = 0; i < 3; ++i) {
        for (const auto& [tk, t] : g[i].terms()) {
            if (tk.key.k != std::array<int, 3>{0, 0, 0}) continue;
            r.witness = TrigPoly::cosine(Angle{tk.key}, t.ccos, tk.alpha_power) +
                        TrigPoly::sine(Angle{tk.key}, t.csin, tk.alpha_power);
            r.detail = "component " + std::to_string(i + 1) + " has k = 0 content";
            return r;
        }
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            TrigPoly c = g[j].diff(i + 1) - g[i].diff(j + 1);
            if (!c.is_zero()) {
                r.witness = c;
                r.detail = "d" + std::to_string(i + 1) + " g" + std::to_string(j + 1) + " - d" +
                           std::to_string(j + 1) + " g" + std::to_string(i + 1) + " != 0";
                return r;
            }
        }
    }
    r.pass = true;
    return r;
}

TrigPoly reconstruct_pressure(const VectorField& g, const Coeff& rho) {
    return potential(g).scaled(-rho);
}

namespace {

TrigPoly constant_part(const TrigPoly& p) {
    TrigPoly c;
    for (const auto& [g, coeff] : p.constant_mode()) c += TrigPoly::constant(coeff, g);
    return c;
}

}  // namespace

PressureMatch compare_pressure(const TrigPoly& p_rec, const TrigPoly& p_paper) {
    for (int s : {+1, -1}) {
        TrigPoly diff = (s > 0) ? p_rec - p_paper : p_rec + p_paper;
        TrigPoly offset = constant_part(diff);
        TrigPoly residual = diff - offset;
        if (residual.is_zero()) return {true, s, offset, residual};
    }
    PressureMatch r;
    TrigPoly diff = p_rec - p_paper;
    r.offset = constant_part(diff);
    r.residual = diff - r.offset;
    return r;
}

bool MomentumResidual::all_zero() const {
    for (int i = 0; i < 3; ++i)
        if (!linear[i].is_zero() || !pressure[i].is_zero()) return false;
    return true;
}

MomentumResidual momentum_residual(const FlowSpec& flow, const DecayField& pressure,
                                   const Coeff& rho) {
    if (pressure.profiles.size() != 1)
        throw std::invalid_argument("momentum_residual: pressure must have one profile");
    if (pressure.rate != 2 * flow.velocity.rate)
        throw std::invalid_argument("momentum_residual: pressure rate " +
                                    rational_str(pressure.rate) + " != 2 * velocity rate " +
                                    rational_str(flow.velocity.rate));

    MomentumResidual r;
    VectorField v = flow.velocity_profiles();
    VectorField g = compute_inertial(v);
    Coeff rate{Rational(flow.velocity.rate)};
    Coeff rho_inv = rho.inverse();
    for (int i = 0; i < 3; ++i) {
        r.linear[i] = -(v[i].scaled(rate).alpha_scaled(2)) - v[i].laplacian();
        r.pressure[i] = g[i] + rho_inv * pressure.profiles[0].diff(i + 1);
    }
    return r;
}

double EnergyResult::value(double alpha) const {
    double acc = 0.0;
    for (const auto& [p, c] : mean_per_grade) acc += std::pow(alpha, p) * c.to_double();
    return acc;
}

EnergyResult kinetic_energy_mean(const DecayField& v) {
    EnergyResult e;
    e.decay_rate = 2 * v.rate;
    static const Coeff half = Coeff::rat(1, 2);
    for (const auto& profile : v.profiles)
        for (const auto& [g, c] : mean_square(profile)) {
            auto [it, inserted] = e.mean_per_grade.emplace(g, half * c);
            if (!inserted) it->second += half * c;
        }
    for (auto it = e.mean_per_grade.begin(); it != e.mean_per_grade.end();)
        it = it->second.is_zero() ? e.mean_per_grade.erase(it) : std::next(it);
    return e;
}

EnergyResult kinetic_energy_mean(const FlowSpec& flow) {
    EnergyResult e = kinetic_energy_mean(flow.velocity);
    for (auto& [g, c] : e.mean_per_grade) c = c * flow.scale_sq;
    return e;
}

BeltramiResult beltrami_check(const VectorField& v, const std::vector<Coeff>& candidates) {
    BeltramiResult r;
    VectorField w = curl(v);
    for (const Coeff& lambda : candidates) {
        bool match = true;
        for (int i = 0; i < 3 && match; ++i)
            match = (w[i] - v[i].scaled(lambda).alpha_scaled(1)).is_zero();
        if (match) {
            r.lambda = lambda;
            break;
        }
    }
    TrigPoly h;
    for (int i = 0; i < 3; ++i) h += v[i] * w[i];
    r.mean_helicity = h.constant_mode();
    return r;
}

std::vector<PhaseTriple> phase_condition_scan() {
    // Axis-independent parts of the symbolic inertial term; substitution of
    // each lattice candidate is then a cheap exact pass over their terms.
    VectorField g = compute_inertial(general_velocity_symbolic());
    VectorField v_parts;
    for (int i = 0; i < 3; ++i) v_parts[i] = split_axis_independent(g[i], i + 1).axis_independent;

    // sixths in {-5..6} per axis: angles -5pi/6 .. pi
    constexpr long kLo = -5, kHi = 6, kSpan = kHi - kLo + 1;
    const std::size_t total = kSpan * kSpan * kSpan;
    std::vector<char> hit(total, 0);
    parallel_for(total, [&](std::size_t idx) {
        long n1 = kLo + long(idx / (kSpan * kSpan));
        long n2 = kLo + long((idx / kSpan) % kSpan);
        long n3 = kLo + long(idx % kSpan);
        PhaseTriple cand = PhaseTriple::of_sixths(n1, n2, n3);
        for (const auto& vi : v_parts)
            if (!vi.subst_phases(cand).is_zero()) return;
        hit[idx] = 1;
    });

    std::vector<PhaseTriple> out;
    for (std::size_t idx = 0; idx < total; ++idx)
        if (hit[idx])
            out.push_back(PhaseTriple::of_sixths(kLo + long(idx / (kSpan * kSpan)),
                                                 kLo + long((idx / kSpan) % kSpan),
                                                 kLo + long(idx % kSpan)));
    return out;
}

VectorField leray_remainder_exact(const VectorField& g) {
    // Per mode k != 0 subtract the projection k (k.c)/|k|^2 of the cos and
    // sin coefficient vectors; k = 0 modes have no gradient part.
    std::set<TrigPoly::TermKey> keys;
    for (const auto& gi : g)
        for (const auto& [tk, t] : gi.terms()) {
            (void)t;
            keys.insert(tk);
        }

    VectorField u;
    for (const auto& tk : keys) {
        std::array<Coeff, 3> cc, cs;
        for (int i = 0; i < 3; ++i) {
            auto it = g[i].terms().find(tk);
            if (it != g[i].terms().end()) {
                cc[i] = it->second.ccos;
                cs[i] = it->second.csin;
            }
        }
        long k2 = tk.key.k_norm2();
        std::array<Coeff, 3> ucc = cc, ucs = cs;
        if (k2 != 0) {
            Coeff dot_c(0), dot_s(0);
            for (int i = 0; i < 3; ++i) {
                Coeff ki = Coeff::rat(tk.key.k[i]);
                dot_c += ki * cc[i];
                dot_s += ki * cs[i];
            }
            Coeff inv_k2 = Coeff::rat(1, k2);
            for (int i = 0; i < 3; ++i) {
                Coeff ki = Coeff::rat(tk.key.k[i]);
                ucc[i] -= ki * inv_k2 * dot_c;
                ucs[i] -= ki * inv_k2 * dot_s;
            }
        }
        for (int i = 0; i < 3; ++i)
            u[i] += TrigPoly::cosine(Angle{tk.key}, ucc[i], tk.alpha_power) +
                    TrigPoly::sine(Angle{tk.key}, ucs[i], tk.alpha_power);
    }
    return u;
}

double l2_mean_norm(const VectorField& f, double alpha) {
    double acc = 0.0;
    for (const auto& fi : f) acc += mean_square_value(fi, alpha);
    return std::sqrt(std::max(acc, 0.0));
}

}  // namespace nsv
