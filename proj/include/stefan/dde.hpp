#pragma once

#include <vector>

#include "stefan/delay_line.hpp"

namespace stefan {

// The commanded flux under delay mismatch obeys the linear delay equation
//   qdot(t) = -c q(t) + c [ q(t - D) - q(t - (D + deltaD)) ],
// which collapses to qdot = -c q when deltaD = 0.
struct DdeSolution {
    std::vector<double> t, p;
    bool went_negative = false;
    double first_negative_time = 0.0;  // NaN when the solution stays non-negative
};

// Method of steps with Heun (explicit trapezoid) steps and linear interpolation of
// delayed values. `history` must cover [-(D + max(deltaD, 0)), 0] including t = 0.
// Pre: dt resolves every positive delay and the delay gap |deltaD|.
DdeSolution solve_controller_dde(double c, double D, double deltaD, const DelayLine& history,
                                 double horizon, double dt);

// Decay rate of the rescaled equation from the Halanay comparison: the root of
//   gamma + 3 |delta_bar| e^{gamma T2_bar} = 1   on (0, 1],
// with delta_bar = c deltaD and T2_bar = c max(D, D + deltaD). Applicable only for
// |delta_bar| < 1/3; returns NaN otherwise.
double halanay_gamma(double delta_bar, double T2_bar);

struct ProbeResult {
    double c = 0.0;
    bool positive = false;
    double first_negative_time = 0.0;  // NaN if none
    bool halanay_applicable = false;
    double gamma = 0.0;                // NaN if not applicable
    bool envelope_ok = false;          // |p(t)| <= 1.01 Mp e^{-gamma c t} throughout
    double envelope_margin = 0.0;      // max_t |p(t)| / (Mp e^{-gamma c t})
};

// Screens candidate gains against the mismatch (D, deltaD) with a constant positive
// history at q0: solves the delay equation per gain and checks sign and envelope.
std::vector<ProbeResult> positivity_probe(double D, double deltaD, const std::vector<double>& gains,
                                          double q0, double horizon);

}  // namespace stefan
