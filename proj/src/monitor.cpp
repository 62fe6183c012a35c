#include "stefan/monitor.hpp"

#include <cmath>

namespace stefan {

ConstraintMonitor::ConstraintMonitor(double Tm, double s0, double s_r, double tol_T,
                                     double tol_sdot, double tol_swin, double tol_qc)
    : Tm_(Tm), s0_(s0), s_r_(s_r), tol_T_(tol_T), tol_sdot_(tol_sdot), tol_swin_(tol_swin),
      tol_qc_(tol_qc) {}

std::uint8_t ConstraintMonitor::update(const TraceRow& row) {
    std::uint8_t flags = 0;
    if (row.qc_cmd > -tol_qc_) flags |= FLAG_QC_POS;
    if (row.min_theta >= Tm_ - tol_T_) flags |= FLAG_T_VALID;
    if (row.sdot >= -tol_sdot_) flags |= FLAG_S_MONO;
    if (row.s >= s0_ - tol_swin_ && row.s <= s_r_ + tol_swin_) flags |= FLAG_S_WINDOW;

    rep_.rows += 1;
    auto note = [&](std::uint8_t bit, long& count, double& first) {
        if (flags & bit) return;
        count += 1;
        if (std::isnan(first)) first = row.t;
    };
    note(FLAG_QC_POS, rep_.qc_pos_viol, rep_.first_qc_pos);
    note(FLAG_T_VALID, rep_.T_valid_viol, rep_.first_T_valid);
    note(FLAG_S_MONO, rep_.s_mono_viol, rep_.first_s_mono);
    note(FLAG_S_WINDOW, rep_.s_window_viol, rep_.first_s_window);
    return flags;
}

MonitorReport constraint_monitor(const Trace& trace, double Tm, double s0, double s_r,
                                 const ScenarioConfig& cfg) {
    ConstraintMonitor mon(Tm, s0, s_r, cfg.tol_T, cfg.tol_sdot, cfg.tol_swin, cfg.tol_qc);
    for (const auto& row : trace.rows) mon.update(row);
    return mon.report();
}

}  // namespace stefan
