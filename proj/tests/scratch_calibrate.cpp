// Throwaway calibration driver: explores steady-state maps of both presets.
#include <array>
#include <cstdio>

#include "etb/sim/config.hpp"
#include "etb/sim/steady_state.hpp"

using namespace etb::sim;

static void probe(const EngineConfig& cfg, std::array<double, 3> u) {
    try {
        EngineState s = steady_state(cfg, u);
        Flows f = compute_flows(s, cfg);
        std::printf(
            "u=(%.2f,%.2f,%.2f)  p_cc=%7.2f bar  p_t=%7.2f bar  wH=%7.1f  wO=%7.1f  "
            "mrgg=%5.2f mrglob=%5.2f mdot_noz=%6.2f pf=%7.2f po=%7.2f\n",
            u[0], u[1], u[2], s.p_cc / 1e5, s.p_t / 1e5, s.omega_h, s.omega_o, f.mr_gg,
            f.mr_glob, f.mdot_noz, f.p_pump_fuel / 1e5, f.p_pump_ox / 1e5);
    } catch (const std::exception& e) {
        std::printf("u=(%.2f,%.2f,%.2f)  FAILED: %s\n", u[0], u[1], u[2], e.what());
    }
}

static void transient(const EngineConfig& cfg, std::array<double, 3> ucmd, double eta,
                      double seconds) {
    EngineState s;  // rest
    ValveCommand cmd{ucmd};
    double max_pcc = 0.0, max_pt = 0.0;
    const int steps = static_cast<int>(seconds * 1000);
    for (int i = 0; i < steps; ++i) {
        s = engine_step(s, cfg, cmd, 1e-3, eta);
        max_pcc = std::max(max_pcc, s.p_cc);
        max_pt = std::max(max_pt, s.p_t);
    }
    std::printf(
        "startup cmd=(%.2f,%.2f,%.2f) eta=%.2f: final p_cc=%7.2f bar (max %7.2f), p_t max "
        "%7.2f, wH=%7.1f wO=%7.1f\n",
        ucmd[0], ucmd[1], ucmd[2], eta, s.p_cc / 1e5, max_pcc / 1e5, max_pt / 1e5, s.omega_h,
        s.omega_o);
}

int main(int argc, char** argv) {
    const bool eb = argc > 1 && std::string(argv[1]) == "eb";
    EngineConfig cfg = eb ? expander_bleed_config() : gas_generator_config();
    std::printf("=== preset %s ===\n", to_string(cfg.cycle_kind).c_str());
    for (double x : {0.3, 0.4, 0.5, 0.6, 0.7, 0.75, 0.8, 0.9, 1.0}) probe(cfg, {x, x, x});
    std::printf("--- eta degraded to 0.85 ---\n");
    EngineConfig deg = cfg;
    deg.eta_tH *= 0.85;
    deg.eta_tO *= 0.85;
    for (double x : {0.7, 0.8, 0.9, 1.0}) probe(deg, {x, x, x});
    std::printf("--- transients from rest ---\n");
    transient(cfg, {1.0, 1.0, 1.0}, 1.0, 10.0);
    transient(cfg, {0.7, 0.7, 0.7}, 1.0, 10.0);
    transient(cfg, {0.9, 0.9, 0.9}, 0.85, 10.0);
    return 0;
}
