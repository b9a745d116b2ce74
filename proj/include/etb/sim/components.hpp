#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "etb/common/errors.hpp"
#include "etb/sim/config.hpp"
#include "etb/sim/types.hpp"

namespace etb::sim {

inline double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// First-order actuator response over one step, exact exponential update.
inline double valve_step(double u, double u_cmd, double tau_v, double dt) {
    if (!(tau_v > 0.0)) throw ConfigError("valve_step: tau_v must be > 0");
    if (!(dt > 0.0)) throw ConfigError("valve_step: dt must be > 0");
    const double next = u_cmd + (u - u_cmd) * std::exp(-dt / tau_v);
    return clamp01(next);
}

// Linear valve characteristic: effective area scales with position.
// No backflow; zero for non-positive pressure drop.
inline double valve_flow(double u, double cda, double rho, double dp) {
    if (dp <= 0.0) return 0.0;
    return u * cda * std::sqrt(2.0 * rho * dp);
}

// Quadratic pump affinity curve, floored at zero head.
inline double pump_head(double omega, double mdot, double a_p, double c_p, double rho) {
    const double dp = rho * (a_p * omega * omega - c_p * mdot * mdot);
    return dp > 0.0 ? dp : 0.0;
}

// Torque from expanding mdot_t through the turbine. The speed floor removes
// the start-from-rest singularity.
inline double turbine_torque(double mdot_t, double dh_t, double eta_t, double omega) {
    return eta_t * mdot_t * dh_t / std::max(omega, kOmegaFloor);
}

// Shaft torque absorbed by the pump at operating point (omega, mdot).
inline double pump_torque(double omega, double mdot, const PumpParams& p) {
    const double dp = pump_head(omega, mdot, p.a_p, p.c_p, p.rho);
    return dp * mdot / (p.rho * p.eta_p * std::max(omega, kOmegaFloor));
}

// One pump feeding up to two valve branches with different back pressures.
// The branch flows and the head-droop term couple through the total flow;
// the total is the unique fixed point of
//     s = sum_i u_i*CdA_i*sqrt(2*rho*max(p_amb + head(omega, s) - p_i, 0))
// found by bisection (the right-hand side is non-increasing in s).
struct BranchFlowResult {
    std::array<double, 2> mdot{};  // per-branch
    double total = 0.0;
    double p_out = 0.0;  // pump outlet pressure at the solution
};

struct Branch {
    double u = 0.0;
    double cda = 0.0;
    double p_down = kAmbientPressure;
};

inline BranchFlowResult solve_pump_branches(double omega, const PumpParams& pump,
                                            const std::array<Branch, 2>& branches,
                                            int n_branches) {
    auto flows_at = [&](double s, BranchFlowResult& r) {
        const double head = pump_head(omega, s, pump.a_p, pump.c_p, pump.rho);
        r.p_out = kAmbientPressure + head;
        r.total = 0.0;
        for (int i = 0; i < n_branches; ++i) {
            r.mdot[i] = valve_flow(branches[i].u, branches[i].cda, pump.rho,
                                   r.p_out - branches[i].p_down);
            r.total += r.mdot[i];
        }
    };

    BranchFlowResult r;
    flows_at(0.0, r);
    const double upper = r.total;
    if (upper <= 0.0) return r;  // no head or everything closed

    double lo = 0.0, hi = upper;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        flows_at(mid, r);
        if (r.total > mid)
            lo = mid;
        else
            hi = mid;
    }
    flows_at(0.5 * (lo + hi), r);
    // Report the self-consistent total, not the trial point.
    return r;
}

}  // namespace etb::sim
