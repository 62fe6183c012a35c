#include "stefan/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stefan {

double predictor_oracle(const PlantState& snap, const DelayLine& inputs,
                        const PhysicalParams& pp, const ScenarioConfig& cfg) {
    if (cfg.D == 0.0) return nominal_law(snap, pp, cfg.c, cfg.s_r).q_c;

    PlantState pred = snap;
    ScenarioConfig resim = cfg;
    resim.deltaD = 0.0;  // predict through the compensated delay
    const int n = std::max(1, static_cast<int>(std::ceil(cfg.D / cfg.dt - 1e-9)));
    resim.dt = cfg.D / n;
    for (int i = 0; i < n; ++i) step(pred, inputs, pp, resim);
    return nominal_law(pred, pp, cfg.c, cfg.s_r).q_c;
}

DelayLine line_from_trace(const Trace& trace, const ScenarioConfig& cfg) {
    if (trace.rows.empty()) throw std::invalid_argument("line_from_trace: empty trace");
    const double span = std::max(cfg.needed_span(), 4.0 * cfg.dt);
    DelayLine line = DelayLine::constant_history(span, trace.rows.front().t, cfg.q_past, cfg.dt);
    for (const auto& row : trace.rows) line.append(row.t, row.qc_cmd);
    return line;
}

}  // namespace stefan
