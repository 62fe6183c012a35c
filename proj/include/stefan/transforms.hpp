#pragma once

#include <cstddef>
#include <vector>

#include "stefan/delay_line.hpp"
#include "stefan/physical_params.hpp"
#include "stefan/plant_state.hpp"

namespace stefan {

// Backstepping kernels.
double kernel_psi(double x, double c, double alpha, double beta);   // (sqrt(c a)/beta) sin(sqrt(c/a) x)
double kernel_mu(double x, double c);                               // c e^{c x}
double kernel_zeta(double x, double c, double alpha, double beta);  // (1/beta) cos(sqrt(c/a) x)

// Snapshot of the plant and input in target variables. Physical fields live on the
// moving grid xu over [0, s]; the delayed input lives on the fixed grid xz over
// [-(D + deltaD), max(0, -deltaD)], where x plays the role of look-back time.
struct TransformedState {
    double t = 0.0, s = 0.0, X = 0.0;
    double c = 0.0, D = 0.0, deltaD = 0.0, s_r = 0.0;
    PhysicalParams pp;

    std::vector<double> xu, u, w, omega;  // u = T - Tm; w, omega on xu
    std::vector<double> xz, v, z;         // v = q_c(t - x - (D+deltaD)) / k; z on xz
    std::size_t idx0 = 0;                 // node index of x = 0 in xz
    double z0 = 0.0;                      // z at x = 0
    double int_u = 0.0;                   // integral_0^s u dx
    double int_zeta_w = 0.0;              // integral_0^s zeta(y) w(y) dy
};

// Delay-variable grid with mandatory nodes at the domain ends, at 0, at -deltaD and
// at -D (when interior). M sets the approximate interval count.
std::vector<double> build_z_grid(double D, double deltaD, int M);

// Index of the node holding `value` (placed there by build_z_grid).
std::size_t node_index(const std::vector<double>& grid, double value);

// Maps (u, v, X) into the target variables:
//   w(x) = u(x) - (c/alpha) int_x^s (x - y) u(y) dy - (c/beta)(x - s) X
//   z(x) = v(x) + c int_x^0 v(y) dy + (c/alpha) int_0^s u dy + (c/beta) X
//   omega = w + (x - s) z(0)
// The int_x^0 v term is evaluated through the delay line's own integral so the
// control-law cancellation at x = -D is reproduced to rounding.
TransformedState direct_transform(const PlantState& st, const DelayLine& inputs,
                                  const PhysicalParams& pp, double c, double s_r, double D,
                                  double deltaD, int M);

struct InverseFields {
    std::vector<double> u;  // on xu
    std::vector<double> v;  // on xz
    double X = 0.0;
};

// Maps target variables back:
//   u(x) = w(x) + (beta/alpha) int_x^s psi(x - y) w(y) dy + psi(x - s) X
//   v(x) = z(x) - int_x^0 mu(x - y) z(y) dy - (beta/alpha) mu(x) int_0^s zeta w dy - zeta(s) mu(x) X
InverseFields inverse_transform(const TransformedState& ts);

}  // namespace stefan
