#include "stefan/residuals.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "stefan/numerics.hpp"

namespace stefan {

ResidualSample target_residuals(const TransformedState& prev, const TransformedState& mid,
                                const TransformedState& next) {
    if (prev.xu.size() != mid.xu.size() || next.xu.size() != mid.xu.size() ||
        prev.xz.size() != mid.xz.size() || next.xz.size() != mid.xz.size())
        throw std::invalid_argument("target_residuals: snapshot grids disagree");
    const double d1 = mid.t - prev.t, d2 = next.t - mid.t;
    if (!(d1 > 0.0) || std::abs(d1 - d2) > 1e-9 * d1)
        throw std::invalid_argument("target_residuals: snapshots must be equally spaced in time");
    const double dt2 = d1 + d2;

    ResidualSample out;
    out.t = mid.t;
    const auto& pp = mid.pp;

    // Transport.
    std::vector<double> zx = gradient(mid.xz, mid.z);
    std::vector<double> r(mid.xz.size()), scale(mid.xz.size());
    for (std::size_t j = 0; j < mid.xz.size(); ++j) {
        const double zt = (next.z[j] - prev.z[j]) / dt2;
        r[j] = (zt + zx[j]) * (zt + zx[j]);
        scale[j] = zx[j] * zx[j];
    }
    out.transport_r = std::sqrt(trapz(mid.xz, r));
    out.transport_scale = std::sqrt(trapz(mid.xz, scale));

    // Heat equation at fixed physical x: w_t|_x = w_t|_xi - xi sdot w_x.
    const std::size_t n = mid.xu.size();
    const double h = mid.xu[1] - mid.xu[0];
    const double sdot = (next.s - prev.s) / dt2;
    std::vector<double> wx = gradient_uniform(h, mid.w);
    std::vector<double> xin(n - 2), rin(n - 2), sin_(n - 2);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double wt_xi = (next.w[i] - prev.w[i]) / dt2;
        const double xi = mid.xu[i] / mid.s;
        const double wxx = (mid.w[i + 1] - 2.0 * mid.w[i] + mid.w[i - 1]) / (h * h);
        const double res = (wt_xi - xi * sdot * wx[i]) - pp.alpha * wxx
                           - (mid.c / pp.beta) * sdot * mid.X;
        xin[i - 1] = mid.xu[i];
        rin[i - 1] = res * res;
        sin_[i - 1] = (pp.alpha * wxx) * (pp.alpha * wxx);
    }
    out.heat_r = std::sqrt(trapz(xin, rin));
    out.heat_scale = std::sqrt(trapz(xin, sin_));

    // Interface ODE.
    const double Xdot = (next.X - prev.X) / dt2;
    const double wxs = (3.0 * mid.w[n - 1] - 4.0 * mid.w[n - 2] + mid.w[n - 3]) / (2.0 * h);
    out.ode_r = std::abs(Xdot + mid.c * mid.X + pp.beta * wxs);
    out.ode_scale = std::abs(Xdot);

    // Boundaries.
    out.bc_zmin = std::abs(mid.z.front());
    const double wx0 = (-3.0 * mid.w[0] + 4.0 * mid.w[1] - mid.w[2]) / (2.0 * h);
    out.bc_neumann = std::abs(wx0 + mid.z0);
    out.bc_dirichlet = std::abs(mid.w.back());
    return out;
}

}  // namespace stefan
