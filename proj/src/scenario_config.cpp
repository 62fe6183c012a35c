#include "stefan/scenario_config.hpp"

#include <cmath>
#include <stdexcept>

namespace stefan {

void validate(const ScenarioConfig& cfg) {
    auto fail = [](const char* msg) { throw std::invalid_argument(std::string("config: ") + msg); };

    if (!(cfg.D >= 0.0) || !std::isfinite(cfg.D)) fail("D must be >= 0");
    if (!std::isfinite(cfg.deltaD)) fail("deltaD must be finite");
    if (cfg.plant_delay() < 0.0) fail("D + deltaD must be >= 0 (plant delay cannot be negative)");
    if (!(cfg.c > 0.0)) fail("c must be positive");
    if (!(cfg.s0 > 0.0)) fail("s0 must be positive");
    if (!(cfg.s_r > cfg.s0)) fail("s_r must exceed s0");
    if (!(cfg.Tbar >= 0.0)) fail("Tbar must be >= 0");
    if (!(cfg.q_past >= 0.0)) fail("q_past must be >= 0");
    if (cfg.N < 2) fail("N must be >= 2");
    if (!(cfg.dt > 0.0)) fail("dt must be positive");
    if (!(cfg.horizon >= cfg.dt)) fail("horizon must cover at least one step");
    if (cfg.plant_delay() != 0.0 && cfg.plant_delay() < cfg.dt)
        fail("plant delay must be zero or at least one step dt");
    if (cfg.D > 0.0 && cfg.D < cfg.dt) fail("D must be zero or at least one step dt");
    if (cfg.diag_stride < 1) fail("diag_stride must be >= 1");
    if (cfg.csv_stride < 0) fail("csv_stride must be >= 0");
    if (cfg.z_points < 0) fail("z_points must be >= 0");
    if (cfg.snapshot_count < 2) fail("snapshot_count must be >= 2");
    if (!(cfg.tol_qc >= 0.0 && cfg.tol_T >= 0.0 && cfg.tol_sdot >= 0.0 && cfg.tol_swin >= 0.0))
        fail("monitor tolerances must be >= 0");
}

}  // namespace stefan
