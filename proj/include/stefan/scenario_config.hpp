#pragma once

#include <string>

namespace stefan {

// Everything a closed-loop run needs besides the material constants. Times are
// seconds after parsing (config files may write `2min`, `30s`).
struct ScenarioConfig {
    // scenario
    double D = 0.0;       // actuator delay the controller compensates [s]
    double deltaD = 0.0;  // plant-side mismatch; actual delay is D + deltaD [s]
    double c = 0.0;       // controller gain [1/s]
    double s_r = 0.0;     // interface setpoint [m]
    double s0 = 0.0;      // initial interface position [m]
    double Tbar = 0.0;    // initial boundary superheat above Tm [K]
    double q_past = 0.0;  // constant commanded flux before t = 0 [W/m]

    // numerics
    int N = 200;           // spatial intervals on the unit grid
    double dt = 0.0;       // outer step [s]; sub-stepping keeps the scheme stable
    double horizon = 0.0;  // final time [s]
    int z_points = 0;      // target intervals for the delay-variable grid (0 = N)
    int diag_stride = 10;  // diagnostics every this many rows
    int csv_stride = 0;    // CSV row decimation (0 = auto, ~2e4 rows)
    int snapshot_count = 17;

    // monitor tolerances
    double tol_qc = 1e-3;     // q_c > -tol_qc [W/m]; deadband for float noise near 0
    double tol_T = 1e-3;      // theta >= Tm - tol_T [K]
    double tol_sdot = 1e-10;  // sdot >= -tol_sdot [m/s]
    double tol_swin = 1e-9;   // s inside [s0 - tol, s_r + tol] [m]

    double plant_delay() const { return D + deltaD; }
    // History the delay line must retain: controller window D and plant lookups D + max(deltaD, 0).
    double needed_span() const { return D + (deltaD > 0.0 ? deltaD : 0.0); }
    int z_intervals() const { return z_points > 0 ? z_points : N; }
};

// Throws std::invalid_argument naming the offending field.
void validate(const ScenarioConfig& cfg);

}  // namespace stefan
