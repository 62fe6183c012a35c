#pragma once

#include "stefan/delay_line.hpp"
#include "stefan/physical_params.hpp"
#include "stefan/plant_state.hpp"
#include "stefan/scenario_config.hpp"

namespace stefan {

// Moving-boundary heat problem on the immobilized unit grid.
//
// With xi = x / s(t) and u(xi, t) = T(xi * s, t), the one-phase problem
//     T_t = alpha T_xx on (0, s),  -k T_x(0) = q_applied,  T(s) = Tm,
//     sdot = -beta T_x(s)
// becomes, on the fixed domain xi in (0, 1),
//     u_t = (alpha / s^2) u_xixi + xi (sdot / s) u_xi,
//     -(k / s) u_xi(0) = q_applied,  u(1) = Tm,  sdot = -(beta / s) u_xi(1).
// Reference checks for the transformation: u == Tm with any constant s is a fixed
// point; a frozen interface (sdot = 0) reduces it to plain diffusion with a 1/s^2
// rate; the linear profile u = Tm + C (1 - xi) gives sdot = beta C / s exactly.
//
// Discretization: second-order central interior stencil, ghost node for the flux
// at xi = 0, second-order one-sided derivative at xi = 1, forward Euler in time
// with automatic sub-stepping so that alpha dt N^2 / s^2 <= 1/2.

struct StepReport {
    double sdot = 0.0;              // interface velocity at the end of the step
    double applied_flux = 0.0;      // flux used during the last sub-step
    double dt_used = 0.0;           // largest sub-step taken
    double stability_margin = 0.0;  // max over sub-steps of alpha dt_sub N^2 / s^2
    int substeps = 0;
};

// One-sided second-order interface gradient: sdot = -(beta / s) u_xi(1). Needs N >= 3.
double interface_velocity(const PlantState& st, const PhysicalParams& pp);

// Advances the state by cfg.dt, reading the applied flux from `inputs` at
// t - (D + deltaD) (sub-step midpoint sampling; newest value when the delay is 0).
// Throws std::runtime_error on domain collapse (s <= 0) or non-finite values.
StepReport step(PlantState& st, const DelayLine& inputs, const PhysicalParams& pp,
                const ScenarioConfig& cfg);

}  // namespace stefan
