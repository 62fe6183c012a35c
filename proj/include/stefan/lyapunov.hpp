#pragma once

#include "stefan/delay_line.hpp"
#include "stefan/physical_params.hpp"
#include "stefan/plant_state.hpp"
#include "stefan/transforms.hpp"

namespace stefan {

// Weights of the composite functional V = q V1 + V2 + p V3 and of the decay
// statement for W = V e^{-a s}:
//   p = c alpha / (16 beta^2 s_r)
//   q = max( 16 s_r^3 / (3 alpha),  D alpha / (2 m s_r) )
//   a = max( 8 D / q,  1 / s_r,  4 c^2 / (p beta^2) )
//   b = min( (m/2) e^{-m D},  alpha / (8 s_r^2),  c )
struct LyapunovWeights {
    double m = 0.0, p = 0.0, q = 0.0, a = 0.0, b = 0.0;
};

// m = 0 selects the default memory weight m = 1/D.
LyapunovWeights lyapunov_weights(const PhysicalParams& pp, double c, double s_r, double D,
                                 double m = 0.0);

struct LyapunovSample {
    double V1 = 0.0;  // int e^{-m x} z_x^2 over [-D, 0] clipped to the z domain
    double V2 = 0.0;  // (1/2) int omega^2 / s_r^2 + omega_x^2 over [0, s]
    double V3 = 0.0;  // (1/2) X^2
    double V = 0.0;
    double W = 0.0;   // V e^{-a s}
};

LyapunovSample lyapunov_sample(const TransformedState& ts, const LyapunovWeights& wts);

// Raw closed-loop norm: |T - Tm|_{H1(0,s)}^2 + (s - s_r)^2 + |q_c(t - x)|_{H1(0,D)}^2.
double norm_Xi(const PlantState& st, const DelayLine& inputs, const PhysicalParams& pp,
               double s_r, double D, int M);

}  // namespace stefan
