#pragma once

#include "stefan/delay_line.hpp"
#include "stefan/physical_params.hpp"
#include "stefan/plant_state.hpp"

namespace stefan {

// Commanded flux with its additive pieces (all in W/m):
//   q_c = -c * (stored + thermal + interface)
//   stored    = integral of q_c over the last D seconds (0 for the nominal law)
//   thermal   = (k / alpha) * integral_0^s (T - Tm) dx
//   interface = (k / beta) * (s - s_r)
struct ControlOutput {
    double q_c = 0.0;
    double stored_term = 0.0;
    double thermal_term = 0.0;
    double interface_term = 0.0;
};

// integral_0^s (T - Tm) dx on the immobilized grid (exact for linear profiles).
double thermal_integral(const PlantState& st, const PhysicalParams& pp);

// Delay-blind law: q_c = -c [ (k/alpha) int (T - Tm) + (k/beta) (s - s_r) ].
ControlOutput nominal_law(const PlantState& st, const PhysicalParams& pp, double c, double s_r);

// Delay-compensated law; `inputs` must cover [t - D, t]. Pure evaluation, no append.
ControlOutput compensated_law(const PlantState& st, const DelayLine& inputs,
                              const PhysicalParams& pp, double c, double s_r, double D);

// Evaluates the law at st.t with the stored-input window closed implicitly over the
// open panel [inputs.back_time(), st.t] (trapezoid solved for the new value), then
// appends the commitment. The appended value satisfies the law against the line's
// own integral to rounding.
ControlOutput commit_compensated(const PlantState& st, DelayLine& inputs,
                                 const PhysicalParams& pp, double c, double s_r, double D);
ControlOutput commit_nominal(const PlantState& st, DelayLine& inputs,
                             const PhysicalParams& pp, double c, double s_r);

// Smallest admissible setpoint for the given start-up data:
//   s0 + beta [ (1/k) integral_{-D}^{0} q_c + (1/alpha) integral_0^{s0} (T0 - Tm) dx ].
// `inputs` must cover [st.t - D, st.t]; st is the initial state.
double setpoint_min(const PlantState& st, const DelayLine& inputs, const PhysicalParams& pp,
                    double D);

// Internal energy functional driven by the commanded flux (dE/dt = q_c):
//   E = (k/alpha) integral_0^s (T - Tm) dx + (k/beta) s + integral_{t-D}^{t} q_c.
double total_energy(const PlantState& st, const DelayLine& inputs, const PhysicalParams& pp,
                    double D);

}  // namespace stefan
