#include "stefan/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "stefan/numerics.hpp"

namespace stefan {

LyapunovWeights lyapunov_weights(const PhysicalParams& pp, double c, double s_r, double D,
                                 double m) {
    if (!(c > 0.0) || !(s_r > 0.0)) throw std::invalid_argument("lyapunov_weights: need c, s_r > 0");
    if (m == 0.0) {
        if (!(D > 0.0)) throw std::invalid_argument("lyapunov_weights: default m needs D > 0");
        m = 1.0 / D;
    }
    LyapunovWeights w;
    w.m = m;
    w.p = c * pp.alpha / (16.0 * pp.beta * pp.beta * s_r);
    w.q = std::max(16.0 * s_r * s_r * s_r / (3.0 * pp.alpha), D * pp.alpha / (2.0 * m * s_r));
    w.a = std::max({8.0 * D / w.q, 1.0 / s_r, 4.0 * c * c / (w.p * pp.beta * pp.beta)});
    w.b = std::min({0.5 * m * std::exp(-m * D), pp.alpha / (8.0 * s_r * s_r), c});
    return w;
}

LyapunovSample lyapunov_sample(const TransformedState& ts, const LyapunovWeights& wts) {
    LyapunovSample out;

    // V1 over [-D, 0] clipped to the z domain; both ends are grid nodes.
    const double lo = std::max(ts.xz.front(), -ts.D);
    const double hi = std::min(0.0, ts.xz.back());
    const std::size_t jlo = node_index(ts.xz, lo);
    const std::size_t jhi = node_index(ts.xz, hi);
    std::vector<double> zx = gradient(ts.xz, ts.z);
    double v1 = 0.0;
    for (std::size_t j = jlo; j < jhi; ++j) {
        const double f0 = std::exp(-wts.m * ts.xz[j]) * zx[j] * zx[j];
        const double f1 = std::exp(-wts.m * ts.xz[j + 1]) * zx[j + 1] * zx[j + 1];
        v1 += 0.5 * (ts.xz[j + 1] - ts.xz[j]) * (f0 + f1);
    }
    out.V1 = v1;

    std::vector<double> ox = gradient(ts.xu, ts.omega);
    std::vector<double> integrand(ts.xu.size());
    for (std::size_t i = 0; i < ts.xu.size(); ++i) {
        const double o = ts.omega[i];
        integrand[i] = o * o / (ts.s_r * ts.s_r) + ox[i] * ox[i];
    }
    out.V2 = 0.5 * trapz(ts.xu, integrand);

    out.V3 = 0.5 * ts.X * ts.X;
    out.V = wts.q * out.V1 + out.V2 + wts.p * out.V3;
    out.W = out.V * std::exp(-wts.a * ts.s);
    return out;
}

double norm_Xi(const PlantState& st, const DelayLine& inputs, const PhysicalParams& pp,
               double s_r, double D, int M) {
    const int N = st.n();
    const double h = st.s / N;
    std::vector<double> u(st.theta.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = st.theta[i] - pp.Tm;
    std::vector<double> ux = gradient_uniform(h, u);
    double uu = 0.0, uxux = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double wgt = (i == 0 || i + 1 == u.size()) ? 0.5 : 1.0;
        uu += wgt * u[i] * u[i];
        uxux += wgt * ux[i] * ux[i];
    }
    double total = h * (uu + uxux) + (st.s - s_r) * (st.s - s_r);

    if (D > 0.0) {
        if (M < 2) throw std::invalid_argument("norm_Xi: M must be >= 2");
        const double hg = D / M;
        std::vector<double> g(static_cast<std::size_t>(M) + 1);
        for (int j = 0; j <= M; ++j) g[static_cast<std::size_t>(j)] = inputs.lookup(st.t - j * hg);
        std::vector<double> gx = gradient_uniform(hg, g);
        double gg = 0.0, gxgx = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double wgt = (j == 0 || j + 1 == g.size()) ? 0.5 : 1.0;
            gg += wgt * g[j] * g[j];
            gxgx += wgt * gx[j] * gx[j];
        }
        total += hg * (gg + gxgx);
    }
    return total;
}

}  // namespace stefan
