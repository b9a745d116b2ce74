#pragma once

#include <cmath>
#include <string>

#include "etb/common/errors.hpp"
#include "etb/sim/components.hpp"
#include "etb/sim/config.hpp"
#include "etb/sim/types.hpp"

namespace etb::sim {

inline double mixture_ratio(double mdot_ox, double mdot_fuel) {
    if (mdot_fuel < kMinFuelFlow) return 0.0;
    return mdot_ox / mdot_fuel;
}

// Valve index conventions shared by both presets: 0..2 controlled
// (GG: vgh/vgo/vgc, EB: fcv/ocv/tcv), 3..4 fixed-schedule.
inline constexpr std::size_t kValveGGFuel = 0;   // vgh | fcv (chamber fuel for EB)
inline constexpr std::size_t kValveGGOx = 1;     // vgo | ocv (chamber ox for EB)
inline constexpr std::size_t kValveTurbine = 2;  // vgc | tcv
inline constexpr std::size_t kValveChamberFuel = 3;  // vch | rcv (regen feed for EB)
inline constexpr std::size_t kValveChamberOx = 4;    // vco | bpv (bleed bypass for EB)

// Resolves every mass flow for the given state. Positions are taken from the
// state; the command only matters for the valve-position derivatives.
inline Flows compute_flows(const EngineState& s, const EngineConfig& cfg) {
    Flows f;
    const auto& v = cfg.valves;

    if (cfg.cycle_kind == CycleKind::gas_generator) {
        // Fuel pump feeds the GG through vgh and the chamber through vch.
        auto fuel = solve_pump_branches(
            s.omega_h, cfg.pump_fuel,
            {Branch{s.u[kValveGGFuel], v[kValveGGFuel].cda, s.p_t},
             Branch{s.u[kValveChamberFuel], v[kValveChamberFuel].cda, s.p_cc}},
            2);
        f.mdot[kValveGGFuel] = fuel.mdot[0];
        f.mdot[kValveChamberFuel] = fuel.mdot[1];
        f.p_pump_fuel = fuel.p_out;
        f.mdot_pump_fuel = fuel.total;

        auto ox = solve_pump_branches(
            s.omega_o, cfg.pump_ox,
            {Branch{s.u[kValveGGOx], v[kValveGGOx].cda, s.p_t},
             Branch{s.u[kValveChamberOx], v[kValveChamberOx].cda, s.p_cc}},
            2);
        f.mdot[kValveGGOx] = ox.mdot[0];
        f.mdot[kValveChamberOx] = ox.mdot[1];
        f.p_pump_ox = ox.p_out;
        f.mdot_pump_ox = ox.total;

        f.mdot[kValveTurbine] = valve_flow(s.u[kValveTurbine], v[kValveTurbine].cda,
                                           v[kValveTurbine].rho, s.p_t - kAmbientPressure);

        f.mr_gg = mixture_ratio(f.mdot[kValveGGOx], f.mdot[kValveGGFuel]);
        f.mr_cc = mixture_ratio(f.mdot[kValveChamberOx], f.mdot[kValveChamberFuel]);
        f.mr_glob = mixture_ratio(f.mdot_pump_ox, f.mdot_pump_fuel);
        f.t_gg = cfg.t_gg.eval(f.mr_gg, cfg.cstar.mr_lo, cfg.cstar.mr_hi);
    } else {
        // Expander-bleed: fuel pump feeds the chamber (fcv) and the cooling
        // circuit (rcv) whose heated outflow collects in the turbine-inlet
        // volume; ox pump feeds the chamber (ocv) only.
        auto fuel = solve_pump_branches(
            s.omega_h, cfg.pump_fuel,
            {Branch{s.u[kValveGGFuel], v[kValveGGFuel].cda, s.p_cc},
             Branch{s.u[kValveChamberFuel], v[kValveChamberFuel].cda, s.p_t}},
            2);
        f.mdot[kValveGGFuel] = fuel.mdot[0];
        f.mdot[kValveChamberFuel] = fuel.mdot[1];
        f.p_pump_fuel = fuel.p_out;
        f.mdot_pump_fuel = fuel.total;

        auto ox = solve_pump_branches(
            s.omega_o, cfg.pump_ox,
            {Branch{s.u[kValveGGOx], v[kValveGGOx].cda, s.p_cc}, Branch{}}, 1);
        f.mdot[kValveGGOx] = ox.mdot[0];
        f.p_pump_ox = ox.p_out;
        f.mdot_pump_ox = ox.total;

        // Turbine feed and overboard bypass, both from the turbine-inlet volume.
        f.mdot[kValveTurbine] = valve_flow(s.u[kValveTurbine], v[kValveTurbine].cda,
                                           v[kValveTurbine].rho, s.p_t - kAmbientPressure);
        f.mdot[kValveChamberOx] = valve_flow(s.u[kValveChamberOx], v[kValveChamberOx].cda,
                                             v[kValveChamberOx].rho, s.p_t - kAmbientPressure);

        f.mr_gg = 0.0;  // turbine branch carries pure fuel
        f.mr_cc = mixture_ratio(f.mdot[kValveGGOx], f.mdot[kValveGGFuel]);
        f.mr_glob = mixture_ratio(f.mdot_pump_ox, f.mdot_pump_fuel);
        f.t_gg = cfg.t_gg.eval(f.mr_gg, cfg.cstar.mr_lo, cfg.cstar.mr_hi);
    }

    f.cstar = cfg.cstar(f.mr_cc);
    f.mdot_noz = s.p_cc * cfg.A_t / f.cstar;
    return f;
}

// Efficiency degradation is applied as a multiplier on both turbine
// efficiencies; 1.0 is the nominal engine.
struct DriveTorques {
    double turbine_h = 0.0;
    double turbine_o = 0.0;
    double pump_h = 0.0;
    double pump_o = 0.0;
    double starter = 0.0;
};

inline DriveTorques compute_torques(const EngineState& s, const EngineConfig& cfg,
                                    const Flows& f, double t, double eta_scale) {
    DriveTorques q;
    double dh_eff = cfg.dh_t;
    if (cfg.cycle_kind == CycleKind::expander_bleed) {
        // Enthalpy pickup in the cooling channels grows with chamber heat flux.
        dh_eff = cfg.dh_t * std::pow(std::max(s.p_cc, kAmbientPressure) / cfg.p_ref, 0.8);
    }
    const double mdot_t = f.mdot[kValveTurbine];
    q.turbine_h = turbine_torque(cfg.turbine_split * mdot_t, dh_eff,
                                 cfg.eta_tH * eta_scale, s.omega_h);
    q.turbine_o = turbine_torque((1.0 - cfg.turbine_split) * mdot_t, dh_eff,
                                 cfg.eta_tO * eta_scale, s.omega_o);
    q.pump_h = pump_torque(s.omega_h, f.mdot_pump_fuel, cfg.pump_fuel);
    q.pump_o = pump_torque(s.omega_o, f.mdot_pump_ox, cfg.pump_ox);
    q.starter = (t >= 0.0 && t < cfg.t_start) ? cfg.tau_start : 0.0;
    return q;
}

// Full right-hand side. Pressure and speed floors are part of the dynamics:
// at the ambient floor a volume cannot be pumped further down, and shafts do
// not spin backwards.
inline Derivatives derivatives(const EngineState& s, const EngineConfig& cfg,
                               const ValveCommand& cmd, double t, double eta_scale = 1.0,
                               Flows* flows_out = nullptr) {
    const Flows f = compute_flows(s, cfg);
    const DriveTorques q = compute_torques(s, cfg, f, t, eta_scale);

    Derivatives d;
    const double rt_cc = kNozzleGamma * kNozzleGamma * f.cstar * f.cstar;  // R*T of chamber gas
    double in_cc, in_t, out_t;
    if (cfg.cycle_kind == CycleKind::gas_generator) {
        in_cc = f.mdot[kValveChamberFuel] + f.mdot[kValveChamberOx];
        in_t = f.mdot[kValveGGFuel] + f.mdot[kValveGGOx];
        out_t = f.mdot[kValveTurbine];
    } else {
        in_cc = f.mdot[kValveGGFuel] + f.mdot[kValveGGOx];
        in_t = f.mdot[kValveChamberFuel];
        out_t = f.mdot[kValveTurbine] + f.mdot[kValveChamberOx];
    }
    d.dp_cc = rt_cc / cfg.V_cc * (in_cc - f.mdot_noz);
    d.dp_t = cfg.R_gg * f.t_gg / cfg.V_gg * (in_t - out_t);
    d.domega_h = (q.turbine_h + q.starter - q.pump_h) / cfg.J_H;
    d.domega_o = (q.turbine_o - q.pump_o) / cfg.J_O;

    if (s.p_cc <= kAmbientPressure && d.dp_cc < 0.0) d.dp_cc = 0.0;
    if (s.p_t <= kAmbientPressure && d.dp_t < 0.0) d.dp_t = 0.0;
    if (s.omega_h <= 0.0 && d.domega_h < 0.0) d.domega_h = 0.0;
    if (s.omega_o <= 0.0 && d.domega_o < 0.0) d.domega_o = 0.0;

    for (std::size_t i = 0; i < kValveCount; ++i) {
        const double u_cmd = cfg.valves[i].controlled ? cmd.u_cmd[i] : cfg.valves[i].schedule(t);
        d.du[i] = (u_cmd - s.u[i]) / cfg.valves[i].tau_v;
    }

    auto check = [](double v, const char* name) {
        if (!std::isfinite(v)) throw NumericalFault(name, "non-finite derivative");
    };
    check(d.dp_cc, "p_cc");
    check(d.dp_t, "p_t");
    check(d.domega_h, "omega_h");
    check(d.domega_o, "omega_o");
    for (std::size_t i = 0; i < kValveCount; ++i) check(d.du[i], "valve position");

    if (flows_out != nullptr) *flows_out = f;
    return d;
}

}  // namespace etb::sim
