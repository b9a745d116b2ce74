#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "etb/common/errors.hpp"
#include "etb/sim/derivatives.hpp"

namespace etb::sim {

// Classical fixed-step RK4 on a flat state vector. rhs(y, t) -> dy/dt.
template <typename Vec, typename Rhs>
Vec rk4_step(const Vec& y, Rhs&& rhs, double t, double dt) {
    if (!(dt > 0.0)) throw ConfigError("rk4_step: dt must be > 0");
    const Vec k1 = rhs(y, t);
    Vec tmp = y;
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
    const Vec k2 = rhs(tmp, t + 0.5 * dt);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
    const Vec k3 = rhs(tmp, t + 0.5 * dt);
    for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + dt * k3[i];
    const Vec k4 = rhs(tmp, t + dt);
    Vec out = y;
    for (std::size_t i = 0; i < y.size(); ++i)
        out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

inline constexpr std::size_t kStateDim = 4 + kValveCount;

inline std::array<double, kStateDim> pack(const EngineState& s) {
    std::array<double, kStateDim> y{};
    y[0] = s.p_cc;
    y[1] = s.p_t;
    y[2] = s.omega_h;
    y[3] = s.omega_o;
    for (std::size_t i = 0; i < kValveCount; ++i) y[4 + i] = s.u[i];
    return y;
}

inline EngineState unpack(const std::array<double, kStateDim>& y, double t) {
    EngineState s;
    s.p_cc = y[0];
    s.p_t = y[1];
    s.omega_h = y[2];
    s.omega_o = y[3];
    for (std::size_t i = 0; i < kValveCount; ++i) s.u[i] = y[4 + i];
    s.t = t;
    return s;
}

inline std::array<double, kStateDim> pack(const Derivatives& d) {
    std::array<double, kStateDim> y{};
    y[0] = d.dp_cc;
    y[1] = d.dp_t;
    y[2] = d.domega_h;
    y[3] = d.domega_o;
    for (std::size_t i = 0; i < kValveCount; ++i) y[4 + i] = d.du[i];
    return y;
}

// Enforces the state invariants after an integration step.
inline void clamp_state(EngineState& s) {
    if (s.p_cc < kAmbientPressure) s.p_cc = kAmbientPressure;
    if (s.p_t < kAmbientPressure) s.p_t = kAmbientPressure;
    if (s.omega_h < 0.0) s.omega_h = 0.0;
    if (s.omega_o < 0.0) s.omega_o = 0.0;
    for (auto& u : s.u) u = clamp01(u);
}

// One physics step of the engine model.
inline EngineState engine_step(const EngineState& s, const EngineConfig& cfg,
                               const ValveCommand& cmd, double dt, double eta_scale = 1.0) {
    auto rhs = [&](const std::array<double, kStateDim>& y, double t) {
        EngineState st = unpack(y, t);
        return pack(derivatives(st, cfg, cmd, t, eta_scale));
    };
    const auto next = rk4_step(pack(s), rhs, s.t, dt);
    EngineState out = unpack(next, s.t + dt);
    clamp_state(out);
    return out;
}

// Integrates a full control interval (n_steps of dt) under one command.
inline EngineState simulate_interval(EngineState s, const EngineConfig& cfg,
                                     const ValveCommand& cmd, double dt, int n_steps,
                                     double eta_scale = 1.0) {
    for (int i = 0; i < n_steps; ++i) s = engine_step(s, cfg, cmd, dt, eta_scale);
    return s;
}

}  // namespace etb::sim
