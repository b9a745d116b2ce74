#pragma once

#include <array>
#include <cstddef>

namespace etb::sim {

inline constexpr double kAmbientPressure = 1.0e5;  // Pa, floor for all volumes
inline constexpr double kOmegaFloor = 10.0;        // rad/s, turbine/pump torque floor
inline constexpr double kMinFuelFlow = 1.0e-6;     // kg/s, below this MR = 0 sentinel

inline constexpr std::size_t kValveCount = 5;
inline constexpr std::size_t kControlledValves = 3;

// Continuous state of the cycle model. p_t is the gas-generator pressure in
// the gas-generator preset and the turbine-inlet pressure in expander-bleed.
struct EngineState {
    double p_cc = kAmbientPressure;  // Pa
    double p_t = kAmbientPressure;   // Pa
    double omega_h = 0.0;            // rad/s, fuel shaft
    double omega_o = 0.0;            // rad/s, ox shaft
    std::array<double, kValveCount> u{};  // valve positions in [0,1]
    double t = 0.0;                  // s
};

// Commanded positions for the three controlled valves (indices 0..2).
struct ValveCommand {
    std::array<double, kControlledValves> u_cmd{};
};

struct Reference {
    double p_cc = 0.0;     // Pa
    double mr_gg = 0.0;    // gas-generator (or turbine-branch) mixture ratio
    double mr_glob = 0.0;  // engine-wide mixture ratio
};

// Mass flows and intermediate quantities of one right-hand-side evaluation.
struct Flows {
    std::array<double, kValveCount> mdot{};  // kg/s through each valve
    double mdot_noz = 0.0;                   // kg/s nozzle outflow
    double p_pump_fuel = 0.0;                // Pa fuel-pump outlet
    double p_pump_ox = 0.0;                  // Pa ox-pump outlet
    double mdot_pump_fuel = 0.0;             // kg/s total through fuel pump
    double mdot_pump_ox = 0.0;               // kg/s total through ox pump
    double mr_gg = 0.0;                      // MR into GG / turbine branch
    double mr_cc = 0.0;                      // MR into chamber
    double mr_glob = 0.0;                    // engine-wide MR
    double t_gg = 0.0;                       // K, GG / turbine-branch gas temperature
    double cstar = 0.0;                      // m/s at chamber MR
};

struct Derivatives {
    double dp_cc = 0.0;
    double dp_t = 0.0;
    double domega_h = 0.0;
    double domega_o = 0.0;
    std::array<double, kValveCount> du{};
};

// Sensor view handed to controllers, raw plus normalized copies.
struct Observation {
    double p_cc = 0.0;
    double p_t = 0.0;
    double mr_gg = 0.0;
    double mr_glob = 0.0;
    double omega_h = 0.0;
    double omega_o = 0.0;
    std::array<double, kControlledValves> u{};
    Reference ref;

    // Layout: p_cc, p_t, mr_gg, mr_glob, omega_h, omega_o, u0, u1, u2,
    //         ref.p_cc, ref.mr_gg, ref.mr_glob
    static constexpr std::size_t kDim = 12;
    std::array<double, kDim> normalized{};
};

}  // namespace etb::sim
