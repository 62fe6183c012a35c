#pragma once

#include <cstdint>
#include <limits>

#include "stefan/scenario_config.hpp"
#include "stefan/trace.hpp"

namespace stefan {

struct MonitorReport {
    long rows = 0;
    long qc_pos_viol = 0, T_valid_viol = 0, s_mono_viol = 0, s_window_viol = 0;
    double first_qc_pos = std::numeric_limits<double>::quiet_NaN();
    double first_T_valid = std::numeric_limits<double>::quiet_NaN();
    double first_s_mono = std::numeric_limits<double>::quiet_NaN();
    double first_s_window = std::numeric_limits<double>::quiet_NaN();

    bool clean() const {
        return qc_pos_viol == 0 && T_valid_viol == 0 && s_mono_viol == 0 && s_window_viol == 0;
    }
};

// Evaluates the physical-constraint flags row by row: positive commanded flux,
// temperature above Tm, non-receding interface, interface inside [s0, s_r].
class ConstraintMonitor {
  public:
    ConstraintMonitor(double Tm, double s0, double s_r, double tol_T, double tol_sdot,
                      double tol_swin, double tol_qc = 0.0);

    // Returns the flag bits for the row and folds them into the report.
    std::uint8_t update(const TraceRow& row);
    const MonitorReport& report() const { return rep_; }

  private:
    double Tm_, s0_, s_r_, tol_T_, tol_sdot_, tol_swin_, tol_qc_;
    MonitorReport rep_;
};

// Replays a recorded trace through the monitor.
MonitorReport constraint_monitor(const Trace& trace, double Tm, double s0, double s_r,
                                 const ScenarioConfig& cfg);

}  // namespace stefan
