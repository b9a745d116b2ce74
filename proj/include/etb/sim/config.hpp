#pragma once

#include <array>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "etb/common/errors.hpp"
#include "etb/common/schedule.hpp"
#include "etb/sim/types.hpp"

namespace etb::sim {

enum class CycleKind { gas_generator, expander_bleed };

inline std::string to_string(CycleKind k) {
    return k == CycleKind::gas_generator ? "gas_generator" : "expander_bleed";
}

inline CycleKind cycle_kind_from_string(const std::string& s) {
    if (s == "gas_generator") return CycleKind::gas_generator;
    if (s == "expander_bleed") return CycleKind::expander_bleed;
    throw ConfigError("unknown cycle_kind: " + s);
}

// Vandenkerckhove function at gamma = 1.2; links c* to the R*T product of the
// chamber gas: R*T = (c* * Gamma)^2.
inline constexpr double kNozzleGamma = 0.6485;

struct PumpParams {
    double a_p = 0.0;    // head coefficient, Dp = rho*(a_p*w^2 - c_p*mdot^2)
    double c_p = 0.0;    // droop coefficient
    double eta_p = 1.0;  // pump efficiency in (0,1]
    double rho = 1.0;    // kg/m^3 pumped liquid density
};

struct ValveRecord {
    std::string name;
    double tau_v = 0.1;   // s, actuator time constant
    double cda = 1e-4;    // m^2, discharge coefficient times area at full open
    double rho = 1000.0;  // kg/m^3, upstream fluid density
    bool controlled = false;
    PiecewiseLinear schedule = PiecewiseLinear::constant(1.0);  // fixed valves only
};

// Concave quadratic characteristic-velocity fit, clamped to its validity range.
struct CstarFit {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    double mr_lo = 0.0, mr_hi = 10.0;

    double operator()(double mr) const {
        const double m = mr < mr_lo ? mr_lo : (mr > mr_hi ? mr_hi : mr);
        return c0 + c1 * m + c2 * m * m;
    }
};

// Linear gas-generator temperature fit T(MR) = t0 + k*MR, clamped to the
// same MR validity range as the c* fit.
struct TggFit {
    double t0 = 300.0, k = 0.0;

    double eval(double mr, double mr_lo, double mr_hi) const {
        const double m = mr < mr_lo ? mr_lo : (mr > mr_hi ? mr_hi : mr);
        return t0 + k * m;
    }
};

struct Limits {
    double p_cc_max = 1.2e7;     // Pa
    double p_gg_max = 1.0e7;     // Pa (turbine-inlet limit for expander-bleed)
    double omega_h_max = 4500.0; // rad/s
    double omega_o_max = 3500.0; // rad/s
    double mr_lo = 0.0;
    double mr_hi = 10.0;
};

struct EngineConfig {
    CycleKind cycle_kind = CycleKind::gas_generator;
    double V_gg = 0.05;  // m^3 (turbine-inlet volume for expander-bleed)
    double V_cc = 0.05;  // m^3
    double J_H = 0.3;    // kg m^2, fuel shaft
    double J_O = 0.2;    // kg m^2, ox shaft
    PumpParams pump_fuel, pump_ox;
    double dh_t = 8.0e5;        // J/kg turbine specific work
    double eta_tH = 0.7;        // fuel-shaft turbine efficiency
    double eta_tO = 0.7;        // ox-shaft turbine efficiency
    double turbine_split = 0.5; // fraction of turbine gas driving the fuel shaft
    double p_ref = 6.0e6;       // Pa, expander-bleed enthalpy pickup reference
    std::array<ValveRecord, kValveCount> valves;
    double A_t = 7.2e-3;  // m^2 throat area
    CstarFit cstar;
    TggFit t_gg;
    double R_gg = 1000.0;  // J/(kg K)
    double R_cc = 350.0;   // J/(kg K)
    double tau_start = 400.0;  // N m starter torque (fuel shaft)
    double t_start = 1.5;      // s starter burn duration
    Limits limits;

    void validate() const {
        auto positive = [](double v, const char* n) {
            if (!(v > 0.0)) throw ConfigError(std::string("EngineConfig: ") + n + " must be > 0");
        };
        positive(V_gg, "V_gg");
        positive(V_cc, "V_cc");
        positive(J_H, "J_H");
        positive(J_O, "J_O");
        positive(A_t, "A_t");
        positive(R_gg, "R_gg");
        positive(R_cc, "R_cc");
        positive(dh_t, "dh_t");
        auto efficiency = [](double v, const char* n) {
            if (!(v > 0.0 && v <= 1.0))
                throw ConfigError(std::string("EngineConfig: ") + n + " must be in (0,1]");
        };
        efficiency(eta_tH, "eta_tH");
        efficiency(eta_tO, "eta_tO");
        efficiency(pump_fuel.eta_p, "pump_fuel.eta_p");
        efficiency(pump_ox.eta_p, "pump_ox.eta_p");
        if (!(turbine_split > 0.0 && turbine_split < 1.0))
            throw ConfigError("EngineConfig: turbine_split must be in (0,1)");
        for (std::size_t i = 0; i < kValveCount; ++i) {
            positive(valves[i].tau_v, "valve tau_v");
            positive(valves[i].cda, "valve cda");
            positive(valves[i].rho, "valve rho");
        }
        for (std::size_t i = 0; i < kValveCount; ++i)
            if (valves[i].controlled != (i < kControlledValves))
                throw ConfigError("EngineConfig: valves 0..2 must be the controlled ones");
        // c* must stay positive across the declared validity range
        const int n = 50;
        for (int i = 0; i <= n; ++i) {
            const double mr = cstar.mr_lo + (cstar.mr_hi - cstar.mr_lo) * i / n;
            if (!(cstar(mr) > 0.0))
                throw ConfigError("EngineConfig: c*(MR) fit non-positive inside validity range");
        }
    }
};

// --- JSON serialization (field names follow the schema in README) ---

inline nlohmann::json to_json(const PiecewiseLinear& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [t, v] : s.knots()) arr.push_back({t, v});
    return arr;
}

inline PiecewiseLinear schedule_from_json(const nlohmann::json& j) {
    std::vector<std::pair<double, double>> knots;
    for (const auto& k : j) knots.emplace_back(k.at(0).get<double>(), k.at(1).get<double>());
    return PiecewiseLinear(std::move(knots));
}

inline nlohmann::json to_json(const EngineConfig& c) {
    nlohmann::json j;
    j["cycle_kind"] = to_string(c.cycle_kind);
    j["V_gg"] = c.V_gg;
    j["V_cc"] = c.V_cc;
    j["J_H"] = c.J_H;
    j["J_O"] = c.J_O;
    auto pump = [](const PumpParams& p) {
        return nlohmann::json{{"a_p", p.a_p}, {"c_p", p.c_p}, {"eta_p", p.eta_p}, {"rho", p.rho}};
    };
    j["pump_fuel"] = pump(c.pump_fuel);
    j["pump_ox"] = pump(c.pump_ox);
    j["dh_t"] = c.dh_t;
    j["eta_tH"] = c.eta_tH;
    j["eta_tO"] = c.eta_tO;
    j["turbine_split"] = c.turbine_split;
    j["p_ref"] = c.p_ref;
    j["valves"] = nlohmann::json::array();
    for (const auto& v : c.valves) {
        nlohmann::json jv{{"name", v.name}, {"tau_v", v.tau_v}, {"cda", v.cda},
                          {"rho", v.rho},  {"controlled", v.controlled}};
        if (!v.controlled) jv["schedule"] = to_json(v.schedule);
        j["valves"].push_back(jv);
    }
    j["A_t"] = c.A_t;
    j["cstar"] = {{"c0", c.cstar.c0}, {"c1", c.cstar.c1}, {"c2", c.cstar.c2},
                  {"mr_lo", c.cstar.mr_lo}, {"mr_hi", c.cstar.mr_hi}};
    j["t_gg"] = {{"t0", c.t_gg.t0}, {"k", c.t_gg.k}};
    j["R_gg"] = c.R_gg;
    j["R_cc"] = c.R_cc;
    j["tau_start"] = c.tau_start;
    j["t_start"] = c.t_start;
    j["limits"] = {{"p_cc_max", c.limits.p_cc_max},       {"p_gg_max", c.limits.p_gg_max},
                   {"omega_h_max", c.limits.omega_h_max}, {"omega_o_max", c.limits.omega_o_max},
                   {"mr_lo", c.limits.mr_lo},             {"mr_hi", c.limits.mr_hi}};
    return j;
}

inline EngineConfig engine_config_from_json(const nlohmann::json& j) {
    EngineConfig c;
    try {
        c.cycle_kind = cycle_kind_from_string(j.at("cycle_kind").get<std::string>());
        c.V_gg = j.at("V_gg").get<double>();
        c.V_cc = j.at("V_cc").get<double>();
        c.J_H = j.at("J_H").get<double>();
        c.J_O = j.at("J_O").get<double>();
        auto pump = [](const nlohmann::json& p) {
            PumpParams out;
            out.a_p = p.at("a_p").get<double>();
            out.c_p = p.at("c_p").get<double>();
            out.eta_p = p.at("eta_p").get<double>();
            out.rho = p.at("rho").get<double>();
            return out;
        };
        c.pump_fuel = pump(j.at("pump_fuel"));
        c.pump_ox = pump(j.at("pump_ox"));
        c.dh_t = j.at("dh_t").get<double>();
        c.eta_tH = j.at("eta_tH").get<double>();
        c.eta_tO = j.at("eta_tO").get<double>();
        c.turbine_split = j.at("turbine_split").get<double>();
        c.p_ref = j.value("p_ref", 6.0e6);
        const auto& jv = j.at("valves");
        if (jv.size() != kValveCount)
            throw ConfigError("EngineConfig: expected exactly 5 valve records");
        for (std::size_t i = 0; i < kValveCount; ++i) {
            ValveRecord v;
            v.name = jv[i].at("name").get<std::string>();
            v.tau_v = jv[i].at("tau_v").get<double>();
            v.cda = jv[i].at("cda").get<double>();
            v.rho = jv[i].at("rho").get<double>();
            v.controlled = jv[i].at("controlled").get<bool>();
            if (!v.controlled && jv[i].contains("schedule"))
                v.schedule = schedule_from_json(jv[i]["schedule"]);
            c.valves[i] = v;
        }
        c.A_t = j.at("A_t").get<double>();
        c.cstar.c0 = j.at("cstar").at("c0").get<double>();
        c.cstar.c1 = j.at("cstar").at("c1").get<double>();
        c.cstar.c2 = j.at("cstar").at("c2").get<double>();
        c.cstar.mr_lo = j.at("cstar").at("mr_lo").get<double>();
        c.cstar.mr_hi = j.at("cstar").at("mr_hi").get<double>();
        c.t_gg.t0 = j.at("t_gg").at("t0").get<double>();
        c.t_gg.k = j.at("t_gg").at("k").get<double>();
        c.R_gg = j.at("R_gg").get<double>();
        c.R_cc = j.at("R_cc").get<double>();
        c.tau_start = j.at("tau_start").get<double>();
        c.t_start = j.at("t_start").get<double>();
        const auto& jl = j.at("limits");
        c.limits.p_cc_max = jl.at("p_cc_max").get<double>();
        c.limits.p_gg_max = jl.at("p_gg_max").get<double>();
        c.limits.omega_h_max = jl.at("omega_h_max").get<double>();
        c.limits.omega_o_max = jl.at("omega_o_max").get<double>();
        c.limits.mr_lo = jl.at("mr_lo").get<double>();
        c.limits.mr_hi = jl.at("mr_hi").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("EngineConfig: malformed JSON: ") + e.what());
    }
    c.validate();
    return c;
}

inline EngineConfig load_engine_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return engine_config_from_json(j);
}

// Desk-scale gas-generator preset. Sized so that wide-open chamber valves and
// nominal controlled-valve openings give a 100 bar chamber steady state.
inline EngineConfig gas_generator_config() {
    EngineConfig c;
    c.cycle_kind = CycleKind::gas_generator;
    c.V_gg = 0.05;
    c.V_cc = 0.05;
    c.J_H = 0.30;
    c.J_O = 0.20;
    c.pump_fuel = {2.78e-2, 1.0e3, 0.70, 70.0};
    c.pump_ox = {3.59e-3, 2.9, 0.70, 1140.0};
    c.dh_t = 9.8e5;
    c.eta_tH = 0.70;
    c.eta_tO = 0.70;
    c.turbine_split = 0.80;
    c.valves[0] = {"vgh", 0.10, 8.3e-5, 70.0, true, {}};
    c.valves[1] = {"vgo", 0.10, 2.0e-5, 1140.0, true, {}};
    c.valves[2] = {"vgc", 0.10, 4.1e-4, 8.9, true, {}};
    c.valves[3] = {"vch", 0.10, 1.6e-4, 70.0, false, PiecewiseLinear::constant(1.0)};
    c.valves[4] = {"vco", 0.10, 2.7e-4, 1140.0, false, PiecewiseLinear::constant(1.0)};
    c.A_t = 7.2e-3;
    c.cstar = {1500.0, 300.0, -25.0, 0.0, 10.0};
    c.t_gg = {300.0, 667.0};
    c.R_gg = 1000.0;
    c.R_cc = 350.0;
    c.tau_start = 400.0;
    c.t_start = 1.5;
    c.limits = {1.2e7, 1.0e7, 4500.0, 3500.0, 0.0, 10.0};
    c.validate();
    return c;
}

// Desk-scale expander-bleed preset in the LUMEN thrust class: heated fuel from
// the cooling circuit drives the turbines and is dumped overboard.
inline EngineConfig expander_bleed_config() {
    EngineConfig c;
    c.cycle_kind = CycleKind::expander_bleed;
    c.V_gg = 0.008;  // turbine-inlet volume
    c.V_cc = 0.02;
    c.J_H = 0.05;
    c.J_O = 0.04;
    c.pump_fuel = {4.84e-3, 4.7e2, 0.70, 420.0};
    c.pump_ox = {2.27e-3, 33.0, 0.70, 1140.0};
    c.dh_t = 2.4e5;
    c.eta_tH = 0.70;
    c.eta_tO = 0.70;
    c.turbine_split = 0.62;
    c.p_ref = 6.0e6;
    c.valves[0] = {"fcv", 0.10, 4.5e-5, 420.0, true, {}};
    c.valves[1] = {"ocv", 0.10, 1.2e-4, 1140.0, true, {}};
    c.valves[2] = {"tcv", 0.10, 8.4e-5, 25.7, true, {}};
    c.valves[3] = {"rcv", 0.10, 2.4e-5, 420.0, false, PiecewiseLinear::constant(1.0)};
    c.valves[4] = {"bpv", 0.10, 8.0e-6, 25.7, false, PiecewiseLinear::constant(0.3)};
    c.A_t = 2.56e-3;
    c.cstar = {1200.0, 380.0, -55.0, 0.0, 8.0};
    c.t_gg = {600.0, 0.0};  // heated-fuel temperature, MR-independent
    c.R_gg = 518.0;
    c.R_cc = 400.0;
    c.tau_start = 50.0;
    c.t_start = 1.5;
    c.limits = {9.0e6, 1.2e7, 3500.0, 3000.0, 0.0, 8.0};
    c.validate();
    return c;
}

inline EngineConfig preset_config(const std::string& name) {
    if (name == "gas_generator" || name == "gg") return gas_generator_config();
    if (name == "expander_bleed" || name == "eb") return expander_bleed_config();
    throw ConfigError("unknown engine preset: " + name);
}

}  // namespace etb::sim
