#pragma once

#include <vector>

#include "stefan/physical_params.hpp"

namespace stefan {

// Liquid-phase temperature profile on the immobilized grid xi_i = i/N over [0, 1]
// (physical position x = xi * s), plus the interface position. theta.back() is the
// interface sample and is pinned to Tm by the solver.
struct PlantState {
    double t = 0.0;            // simulation time [s]
    double s = 0.0;            // interface position [m]
    std::vector<double> theta; // N+1 temperature samples [K]

    int n() const { return static_cast<int>(theta.size()) - 1; }
};

// Initial condition: interface at s0 and the linear profile
// theta(xi) = Tm + Tbar * (1 - xi), which meets the melt constraint theta >= Tm
// and the interface condition theta(1) = Tm.
PlantState init_state(const PhysicalParams& pp, double s0, double Tbar, int N);

double min_theta(const PlantState& st);

}  // namespace stefan
