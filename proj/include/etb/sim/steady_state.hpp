#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "etb/common/errors.hpp"
#include "etb/sim/integrate.hpp"
#include "etb/sim/observe.hpp"

namespace etb::sim {

// Time far past starter burnout and every schedule knot; steady-state
// solutions are sought for the coasting engine.
inline constexpr double kSteadyTime = 1.0e6;

inline std::array<double, 4> core_scales(const EngineConfig& cfg) {
    return {cfg.limits.p_cc_max, cfg.limits.p_gg_max, cfg.limits.omega_h_max,
            cfg.limits.omega_o_max};
}

// Max-norm of the core derivative, scaled per component by the state scale.
inline double steady_residual(const EngineState& s, const EngineConfig& cfg,
                              const ValveCommand& cmd) {
    const Derivatives d = derivatives(s, cfg, cmd, kSteadyTime);
    const auto sc = core_scales(cfg);
    const std::array<double, 4> f = {d.dp_cc, d.dp_t, d.domega_h, d.domega_o};
    double r = 0.0;
    for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(f[i]) / sc[i]);
    return r;
}

namespace detail {

inline std::array<double, 4> core_rhs(const std::array<double, 4>& x, const EngineConfig& cfg,
                                      const ValveCommand& cmd,
                                      const std::array<double, kValveCount>& u) {
    EngineState s;
    s.p_cc = std::max(x[0], kAmbientPressure);
    s.p_t = std::max(x[1], kAmbientPressure);
    s.omega_h = std::max(x[2], 0.0);
    s.omega_o = std::max(x[3], 0.0);
    s.u = u;
    s.t = kSteadyTime;
    const Derivatives d = derivatives(s, cfg, cmd, kSteadyTime);
    return {d.dp_cc, d.dp_t, d.domega_h, d.domega_o};
}

// Solves J*delta = -f by Gaussian elimination with partial pivoting.
inline std::array<double, 4> solve4(std::array<std::array<double, 4>, 4> J,
                                    std::array<double, 4> f) {
    std::array<int, 4> piv = {0, 1, 2, 3};
    for (int c = 0; c < 4; ++c) {
        int best = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(J[r][c]) > std::abs(J[best][c])) best = r;
        std::swap(J[c], J[best]);
        std::swap(f[c], f[best]);
        (void)piv;
        if (J[c][c] == 0.0) throw NumericalFault("steady_state", "singular Jacobian");
        for (int r = c + 1; r < 4; ++r) {
            const double m = J[r][c] / J[c][c];
            for (int k = c; k < 4; ++k) J[r][k] -= m * J[c][k];
            f[r] -= m * f[c];
        }
    }
    std::array<double, 4> delta{};
    for (int r = 3; r >= 0; --r) {
        double acc = -f[r];
        for (int k = r + 1; k < 4; ++k) acc -= J[r][k] * delta[k];
        delta[r] = acc / J[r][r];
    }
    return delta;
}

}  // namespace detail

// Finds the powered equilibrium for pinned valve positions: pseudo-time
// relaxation from an energized initial guess, then damped Newton on the
// four core states. Converges to scaled residual < 1e-8 or reports failure.
inline EngineState steady_state(const EngineConfig& cfg,
                                const std::array<double, kControlledValves>& u_controlled,
                                double tol = 1.0e-8) {
    ValveCommand cmd{u_controlled};
    std::array<double, kValveCount> u{};
    for (std::size_t i = 0; i < kValveCount; ++i)
        u[i] = cfg.valves[i].controlled ? u_controlled[i] : cfg.valves[i].schedule.final_value();

    EngineState s;
    s.p_cc = 0.5 * cfg.limits.p_cc_max;
    s.p_t = 0.5 * cfg.limits.p_gg_max;
    s.omega_h = 0.6 * cfg.limits.omega_h_max;
    s.omega_o = 0.6 * cfg.limits.omega_o_max;
    s.u = u;
    s.t = kSteadyTime;

    const auto sc = core_scales(cfg);
    long iterations = 0;
    const long budget = 10000;

    // Pseudo-time relaxation into the attractor's basin.
    const double dt = 1.0e-3;
    double res = steady_residual(s, cfg, cmd);
    while (res > 1.0e-4 && iterations < budget / 2) {
        for (int k = 0; k < 100; ++k) {
            s = engine_step(s, cfg, cmd, dt);
            s.t = kSteadyTime;  // keep starter off and schedules final
        }
        ++iterations;
        res = steady_residual(s, cfg, cmd);
    }

    // Damped Newton polish.
    std::array<double, 4> x = {s.p_cc, s.p_t, s.omega_h, s.omega_o};
    auto norm = [&](const std::array<double, 4>& f) {
        double r = 0.0;
        for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(f[i]) / sc[i]);
        return r;
    };
    std::array<double, 4> f = detail::core_rhs(x, cfg, cmd, u);
    res = norm(f);
    while (res > tol && iterations < budget) {
        ++iterations;
        std::array<std::array<double, 4>, 4> J{};
        for (int c = 0; c < 4; ++c) {
            const double h = 1.0e-7 * sc[c];
            auto xp = x;
            xp[c] += h;
            const auto fp = detail::core_rhs(xp, cfg, cmd, u);
            auto xm = x;
            xm[c] -= h;
            const auto fm = detail::core_rhs(xm, cfg, cmd, u);
            for (int r = 0; r < 4; ++r) J[r][c] = (fp[r] - fm[r]) / (2.0 * h);
        }
        const auto delta = detail::solve4(J, f);
        double alpha = 1.0;
        bool improved = false;
        for (int bt = 0; bt < 30; ++bt) {
            auto xt = x;
            for (int i = 0; i < 4; ++i) xt[i] += alpha * delta[i];
            xt[0] = std::max(xt[0], kAmbientPressure);
            xt[1] = std::max(xt[1], kAmbientPressure);
            xt[2] = std::max(xt[2], 0.0);
            xt[3] = std::max(xt[3], 0.0);
            const auto ft = detail::core_rhs(xt, cfg, cmd, u);
            if (norm(ft) < res) {
                x = xt;
                f = ft;
                res = norm(ft);
                improved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!improved) break;
    }

    if (res > tol) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "no convergence after %ld iterations, scaled residual %.3e", iterations,
                      res);
        throw NumericalFault("steady_state", buf);
    }

    EngineState out;
    out.p_cc = x[0];
    out.p_t = x[1];
    out.omega_h = x[2];
    out.omega_o = x[3];
    out.u = u;
    out.t = 0.0;

    // Rest and other unpowered fixed points are reported as failures: the
    // caller asked for an operating point, and there is none.
    if (out.omega_h < 5.0 * kOmegaFloor || out.omega_o < 5.0 * kOmegaFloor ||
        out.p_cc < 1.5 * kAmbientPressure) {
        throw NumericalFault("steady_state", "degenerate (unpowered) fixed point");
    }
    return out;
}

}  // namespace etb::sim
