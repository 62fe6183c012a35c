#include "stefan/f_checks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "stefan/numerics.hpp"

namespace stefan {

namespace {

struct Window {
    std::size_t j0, j1;  // node indices of -deltaD and 0, in grid order
};

Window mismatch_window(const TransformedState& ts) {
    const std::size_t jmd = node_index(ts.xz, -ts.deltaD);
    return {std::min(jmd, ts.idx0), std::max(jmd, ts.idx0)};
}

}  // namespace

FIdentity f_identity(const TransformedState& ts) {
    FIdentity out;
    if (ts.deltaD == 0.0) return out;
    const auto& pp = ts.pp;
    const double c = ts.c;

    std::vector<double> Cv = cumtrapz(ts.xz, ts.v);
    const std::size_t jmd = node_index(ts.xz, -ts.deltaD);
    out.f_direct = Cv[ts.idx0] - Cv[jmd];

    std::vector<double> ez(ts.xz.size());
    for (std::size_t j = 0; j < ts.xz.size(); ++j)
        ez[j] = std::exp(-c * (ts.xz[j] + ts.deltaD)) * ts.z[j];
    std::vector<double> Ce = cumtrapz(ts.xz, ez);
    const double Ie = Ce[ts.idx0] - Ce[jmd];

    const double zs = kernel_zeta(ts.s, c, pp.alpha, pp.beta);
    const double bracket = (pp.beta / pp.alpha) * ts.int_zeta_w + zs * ts.X;
    out.f_closed = Ie - (1.0 - std::exp(-c * ts.deltaD)) * bracket;
    out.fprime_closed = ts.z[jmd] - ts.z0 - c * out.f_closed;
    return out;
}

FBounds f_bounds(const TransformedState& ts) {
    FBounds out;
    if (ts.deltaD == 0.0) return out;
    const auto& pp = ts.pp;
    const double c = ts.c;
    const double dd = ts.deltaD;
    const double e1 = 1.0 - std::exp(-c * dd);

    out.M1 = ((dd > 0.0) ? 1.0 : -1.0) * (1.0 - std::exp(-2.0 * c * dd)) / (2.0 * c);
    out.M2 = (8.0 * ts.s_r / (pp.alpha * pp.alpha)) * e1 * e1;
    out.M3 = (8.0 / (pp.alpha * c)) * e1 * e1;
    out.M4 = (4.0 / (pp.beta * pp.beta)) * e1 * e1;

    const Window win = mismatch_window(ts);
    std::vector<double> zx = gradient(ts.xz, ts.z);
    double z2 = 0.0, zx2 = 0.0;
    for (std::size_t j = win.j0; j < win.j1; ++j) {
        const double dx = ts.xz[j + 1] - ts.xz[j];
        z2 += 0.5 * dx * (ts.z[j] * ts.z[j] + ts.z[j + 1] * ts.z[j + 1]);
        zx2 += 0.5 * dx * (zx[j] * zx[j] + zx[j + 1] * zx[j + 1]);
    }
    std::vector<double> o2(ts.xu.size());
    for (std::size_t i = 0; i < ts.xu.size(); ++i) o2[i] = ts.omega[i] * ts.omega[i];
    const double omega2 = trapz(ts.xu, o2);

    const FIdentity id = f_identity(ts);
    out.f2_lhs = id.f_closed * id.f_closed;
    out.fp2_lhs = id.fprime_closed * id.fprime_closed;
    const double state_part = out.M2 * omega2 + out.M3 * ts.z0 * ts.z0 + out.M4 * ts.X * ts.X;
    out.f2_rhs = 2.0 * out.M1 * z2 + state_part;
    out.fp2_rhs = 4.0 * std::abs(dd) * zx2 + 2.0 * c * c * out.M1 * z2 + c * c * state_part;
    return out;
}

}  // namespace stefan
