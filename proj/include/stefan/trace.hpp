#pragma once

#include <cstdint>
#include <vector>

namespace stefan {

// Constraint flag bits; set means the row satisfies the constraint.
enum RowFlag : std::uint8_t {
    FLAG_QC_POS = 1u << 0,   // commanded flux positive
    FLAG_T_VALID = 1u << 1,  // min temperature >= Tm - tol
    FLAG_S_MONO = 1u << 2,   // interface not receding
    FLAG_S_WINDOW = 1u << 3, // s inside [s0, s_r] window
    FLAG_ALL = FLAG_QC_POS | FLAG_T_VALID | FLAG_S_MONO | FLAG_S_WINDOW,
};

// One accepted outer step (plus the initial row at t = 0).
struct TraceRow {
    double t = 0.0;
    double s = 0.0;
    double sdot = 0.0;
    double qc_cmd = 0.0;      // commanded flux at t
    double qc_applied = 0.0;  // flux arriving at the boundary at t
    double T0 = 0.0;          // boundary temperature
    double energy = 0.0;      // internal energy functional
    double min_theta = 0.0;   // coldest grid sample (drives FLAG_T_VALID)
    std::uint8_t flags = 0;
};

struct Trace {
    std::vector<TraceRow> rows;
};

}  // namespace stefan
