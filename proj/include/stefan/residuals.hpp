#pragma once

#include "stefan/transforms.hpp"

namespace stefan {

// Discrete residuals of the target system evaluated at the middle of three equally
// spaced transformed snapshots (time derivatives by central differences):
//   transport:  z_t + z_x = 0                     on the z domain
//   heat:       w_t = alpha w_xx + (c/beta) sdot X  in (0, s)
//   ode:        Xdot = -c X - beta w_x(s)
//   boundaries: z(zmin) = 0,  w_x(0) + z(0) = 0,  w(s) = 0
// The *_r members are L2 norms of the residual; *_scale are L2 norms of the
// dominant balancing term, for relative reporting.
struct ResidualSample {
    double t = 0.0;
    double transport_r = 0.0, transport_scale = 0.0;
    double heat_r = 0.0, heat_scale = 0.0;
    double ode_r = 0.0, ode_scale = 0.0;
    double bc_zmin = 0.0, bc_neumann = 0.0, bc_dirichlet = 0.0;
};

ResidualSample target_residuals(const TransformedState& prev, const TransformedState& mid,
                                const TransformedState& next);

}  // namespace stefan
