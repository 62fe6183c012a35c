#pragma once

#include "stefan/transforms.hpp"

namespace stefan {

// The mismatch functional f(t) = int_{-deltaD}^{0} v(x) dx measured two ways:
// directly by quadrature of v, and through the target variables,
//   f = int_{-deltaD}^{0} e^{-c (x + deltaD)} z dx
//       - (1 - e^{-c deltaD}) [ (beta/alpha) int_0^s zeta w dy + zeta(s) X ],
// together with its derivative f'(t) = z(-deltaD) - z(0) - c f(t), which follows
// from the transport of v and the inverse map evaluated at the window ends.
struct FIdentity {
    double f_direct = 0.0;
    double f_closed = 0.0;
    double fprime_closed = 0.0;
};

FIdentity f_identity(const TransformedState& ts);

// The mismatch-term bounds with J = [min(0,-deltaD), max(0,-deltaD)] and
//   M1 = sign(deltaD) (1 - e^{-2 c deltaD}) / (2c)
//   M2 = (8 s_r / alpha^2) (1 - e^{-c deltaD})^2
//   M3 = (8 / (alpha c)) (1 - e^{-c deltaD})^2
//   M4 = (4 / beta^2) (1 - e^{-c deltaD})^2:
//   f^2  <= 2 M1 |z|^2_J + M2 |omega|^2 + M3 z(0)^2 + M4 X^2
//   f'^2 <= 4 |deltaD| |z_x|^2_J + 2 c^2 M1 |z|^2_J + c^2 (M2 |omega|^2 + M3 z(0)^2 + M4 X^2)
struct FBounds {
    double f2_lhs = 0.0, f2_rhs = 0.0;
    double fp2_lhs = 0.0, fp2_rhs = 0.0;
    double M1 = 0.0, M2 = 0.0, M3 = 0.0, M4 = 0.0;
};

FBounds f_bounds(const TransformedState& ts);

}  // namespace stefan
