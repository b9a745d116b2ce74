#pragma once

#include <array>
#include <cmath>

#include "etb/common/errors.hpp"
#include "etb/sim/derivatives.hpp"

namespace etb::sim {

// Per-slot scales for the normalized observation vector, from the config limits.
inline std::array<double, Observation::kDim> observation_scales(const EngineConfig& cfg) {
    std::array<double, Observation::kDim> s{};
    s[0] = cfg.limits.p_cc_max;
    s[1] = cfg.limits.p_gg_max;
    s[2] = cfg.limits.mr_hi;
    s[3] = cfg.limits.mr_hi;
    s[4] = cfg.limits.omega_h_max;
    s[5] = cfg.limits.omega_o_max;
    s[6] = s[7] = s[8] = 1.0;  // valve positions are already dimensionless
    s[9] = cfg.limits.p_cc_max;
    s[10] = cfg.limits.mr_hi;
    s[11] = cfg.limits.mr_hi;
    return s;
}

inline std::array<double, Observation::kDim> raw_vector(const Observation& o) {
    return {o.p_cc, o.p_t,  o.mr_gg, o.mr_glob, o.omega_h,  o.omega_o,
            o.u[0], o.u[1], o.u[2],  o.ref.p_cc, o.ref.mr_gg, o.ref.mr_glob};
}

inline void apply_raw_vector(Observation& o, const std::array<double, Observation::kDim>& r) {
    o.p_cc = r[0];
    o.p_t = r[1];
    o.mr_gg = r[2];
    o.mr_glob = r[3];
    o.omega_h = r[4];
    o.omega_o = r[5];
    o.u = {r[6], r[7], r[8]};
    o.ref = {r[9], r[10], r[11]};
}

inline void normalize_observation(Observation& o, const EngineConfig& cfg) {
    const auto scales = observation_scales(cfg);
    const auto raw = raw_vector(o);
    for (std::size_t i = 0; i < Observation::kDim; ++i) {
        o.normalized[i] = raw[i] / scales[i];
        if (!std::isfinite(o.normalized[i]))
            throw NumericalFault("observation", "non-finite normalized component");
    }
}

inline Observation denormalize_observation(const std::array<double, Observation::kDim>& norm,
                                           const EngineConfig& cfg) {
    const auto scales = observation_scales(cfg);
    Observation o;
    std::array<double, Observation::kDim> raw{};
    for (std::size_t i = 0; i < Observation::kDim; ++i) raw[i] = norm[i] * scales[i];
    apply_raw_vector(o, raw);
    o.normalized = norm;
    return o;
}

// Builds the controller-facing view of the state. Mixture ratios come from
// the resolved mass flows; zero fuel flow reports the 0 sentinel.
inline Observation observe(const EngineState& s, const EngineConfig& cfg, const Reference& ref) {
    const Flows f = compute_flows(s, cfg);
    Observation o;
    o.p_cc = s.p_cc;
    o.p_t = s.p_t;
    o.mr_gg = f.mr_gg;
    o.mr_glob = f.mr_glob;
    o.omega_h = s.omega_h;
    o.omega_o = s.omega_o;
    for (std::size_t i = 0; i < kControlledValves; ++i) o.u[i] = s.u[i];
    o.ref = ref;
    normalize_observation(o, cfg);
    return o;
}

}  // namespace etb::sim
