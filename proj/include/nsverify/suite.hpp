#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsverify/flows.hpp"

namespace nsv {

struct VerifyOptions {
    double alpha = 1.0;  // ignored when the flow binds its own wave number
    double kappa = 0.05;
    Coeff rho = Coeff(1);
    int grid_n = 32;
    double leray_tolerance = 1e-12;  // relative to max|g|
    bool numeric_checks = true;
};

struct CheckEntry {
    std::string id;
    enum class Mode { exact, numeric } mode = Mode::exact;
    bool pass = false;
    std::optional<TrigPoly> witness;      // exact mode, failures only
    std::optional<double> max_abs_error;  // numeric mode
    std::optional<double> threshold;
    std::string notes;
};

struct VerificationReport {
    std::string flow;
    std::vector<CheckEntry> entries;

    bool all_pass() const;
    const CheckEntry* find(const std::string& id) const;
    nlohmann::json to_json() const;
};

/// The full per-flow verification: divergence, decay structure, inertial
/// term against the printed forms, axis-independent parts, the gradient
/// condition, pressure reconstruction and comparison, momentum residual,
/// energy, Beltrami structure, and the numeric Leray remainder.
VerificationReport run_verification(const FlowSpec& flow, const VerifyOptions& opt = {});

}  // namespace nsv
