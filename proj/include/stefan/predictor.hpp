#pragma once

#include "stefan/control.hpp"
#include "stefan/scenario_config.hpp"
#include "stefan/solver.hpp"
#include "stefan/trace.hpp"

namespace stefan {

// Re-simulates the plant forward by cfg.D from `snap`, driving it with the already
// committed inputs only (the flux arriving during (t, t + D] was commanded during
// (t - D, t]), then evaluates the nominal law on the predicted state. With exact
// compensation this equals the compensated command issued at snap.t.
double predictor_oracle(const PlantState& snap, const DelayLine& inputs,
                        const PhysicalParams& pp, const ScenarioConfig& cfg);

// Reconstructs the committed-input line for a finished run: constant q_past warm-up
// followed by one sample per trace row.
DelayLine line_from_trace(const Trace& trace, const ScenarioConfig& cfg);

}  // namespace stefan
