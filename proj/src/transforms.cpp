#include "stefan/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stefan/numerics.hpp"

namespace stefan {

double kernel_psi(double x, double c, double alpha, double beta) {
    return (std::sqrt(c * alpha) / beta) * std::sin(std::sqrt(c / alpha) * x);
}

double kernel_mu(double x, double c) {
    return c * std::exp(c * x);
}

double kernel_zeta(double x, double c, double alpha, double beta) {
    return (1.0 / beta) * std::cos(std::sqrt(c / alpha) * x);
}

std::vector<double> build_z_grid(double D, double deltaD, int M) {
    const double zmin = -(D + deltaD);
    const double zmax = std::max(0.0, -deltaD);
    if (!(zmax > zmin)) throw std::invalid_argument("build_z_grid: empty delay domain");
    if (M < 4) throw std::invalid_argument("build_z_grid: M must be >= 4");

    std::vector<double> brk = {zmin, zmax};
    auto add = [&](double b) {
        if (b > zmin && b < zmax) brk.push_back(b);
    };
    add(0.0);
    add(-deltaD);
    add(-D);
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());

    const double L = zmax - zmin;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(M) + brk.size() + 1);
    grid.push_back(brk[0]);
    for (std::size_t seg = 0; seg + 1 < brk.size(); ++seg) {
        const double a = brk[seg], b = brk[seg + 1];
        const int n = std::max(1, static_cast<int>(std::lround(M * (b - a) / L)));
        for (int i = 1; i < n; ++i) grid.push_back(a + (b - a) * i / n);
        grid.push_back(b);  // breakpoint stored exactly
    }
    return grid;
}

std::size_t node_index(const std::vector<double>& grid, double value) {
    const double tol = 1e-9 * std::max(1.0, grid.back() - grid.front());
    auto it = std::lower_bound(grid.begin(), grid.end(), value - tol);
    if (it == grid.end() || std::abs(*it - value) > tol)
        throw std::invalid_argument("node_index: value is not a grid node");
    return static_cast<std::size_t>(it - grid.begin());
}

TransformedState direct_transform(const PlantState& st, const DelayLine& inputs,
                                  const PhysicalParams& pp, double c, double s_r, double D,
                                  double deltaD, int M) {
    const int N = st.n();
    if (N < 3) throw std::invalid_argument("direct_transform: need N >= 3");

    TransformedState ts;
    ts.t = st.t;
    ts.s = st.s;
    ts.s_r = s_r;
    ts.X = st.s - s_r;
    ts.c = c;
    ts.D = D;
    ts.deltaD = deltaD;
    ts.pp = pp;

    const std::size_t n = static_cast<std::size_t>(N) + 1;
    const double h = st.s / N;
    ts.xu.resize(n);
    ts.u.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        ts.xu[i] = h * static_cast<double>(i);
        ts.u[i] = st.theta[i] - pp.Tm;
    }

    // Suffix integrals S1 = int_x^s u dy and S2 = int_x^s y u(y) dy.
    std::vector<double> S1(n, 0.0), S2(n, 0.0);
    for (std::size_t i = n - 1; i-- > 0;) {
        const double dx = ts.xu[i + 1] - ts.xu[i];
        S1[i] = S1[i + 1] + 0.5 * dx * (ts.u[i] + ts.u[i + 1]);
        S2[i] = S2[i + 1] + 0.5 * dx * (ts.xu[i] * ts.u[i] + ts.xu[i + 1] * ts.u[i + 1]);
    }
    ts.int_u = S1[0];

    ts.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = ts.xu[i];
        ts.w[i] = ts.u[i] - (c / pp.alpha) * (x * S1[i] - S2[i])
                  - (c / pp.beta) * (x - st.s) * ts.X;
    }

    // Delay-variable fields.
    const double d2 = D + deltaD;
    ts.xz = build_z_grid(D, deltaD, M);
    ts.idx0 = node_index(ts.xz, 0.0);
    const std::size_t m = ts.xz.size();
    ts.v.resize(m);
    ts.z.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double x = ts.xz[j];
        ts.v[j] = inputs.lookup(st.t - x - d2) / pp.k;
        const double int_v = inputs.integral(st.t - d2, st.t - x - d2) / pp.k;
        ts.z[j] = ts.v[j] + c * int_v + (c / pp.alpha) * ts.int_u + (c / pp.beta) * ts.X;
    }
    ts.z0 = ts.z[ts.idx0];

    ts.omega.resize(n);
    for (std::size_t i = 0; i < n; ++i) ts.omega[i] = ts.w[i] + (ts.xu[i] - st.s) * ts.z0;

    std::vector<double> zw(n);
    for (std::size_t i = 0; i < n; ++i)
        zw[i] = kernel_zeta(ts.xu[i], c, pp.alpha, pp.beta) * ts.w[i];
    ts.int_zeta_w = trapz(ts.xu, zw);

    return ts;
}

InverseFields inverse_transform(const TransformedState& ts) {
    const auto& pp = ts.pp;
    const double c = ts.c;
    const double a = std::sqrt(c / pp.alpha);
    const std::size_t n = ts.xu.size();

    // Suffix integrals of cos(a y) w and sin(a y) w for the sine-kernel convolution.
    std::vector<double> Sc(n, 0.0), Ss(n, 0.0);
    for (std::size_t i = n - 1; i-- > 0;) {
        const double dx = ts.xu[i + 1] - ts.xu[i];
        const double c0 = std::cos(a * ts.xu[i]) * ts.w[i];
        const double c1 = std::cos(a * ts.xu[i + 1]) * ts.w[i + 1];
        const double s0 = std::sin(a * ts.xu[i]) * ts.w[i];
        const double s1 = std::sin(a * ts.xu[i + 1]) * ts.w[i + 1];
        Sc[i] = Sc[i + 1] + 0.5 * dx * (c0 + c1);
        Ss[i] = Ss[i + 1] + 0.5 * dx * (s0 + s1);
    }

    InverseFields inv;
    inv.X = ts.X;
    inv.u.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = ts.xu[i];
        const double conv = a * (std::sin(a * x) * Sc[i] - std::cos(a * x) * Ss[i]);
        inv.u[i] = ts.w[i] + conv + kernel_psi(x - ts.s, c, pp.alpha, pp.beta) * ts.X;
    }

    // G(x) = int_{zmin}^x e^{-c y} z dy for the exponential-kernel convolution.
    const std::size_t m = ts.xz.size();
    std::vector<double> ez(m);
    for (std::size_t j = 0; j < m; ++j) ez[j] = std::exp(-c * ts.xz[j]) * ts.z[j];
    std::vector<double> G = cumtrapz(ts.xz, ez);

    const double zs = kernel_zeta(ts.s, c, pp.alpha, pp.beta);
    inv.v.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double x = ts.xz[j];
        const double mu = kernel_mu(x, c);
        const double conv = c * std::exp(c * x) * (G[ts.idx0] - G[j]);
        inv.v[j] = ts.z[j] - conv - (pp.beta / pp.alpha) * mu * ts.int_zeta_w - zs * mu * ts.X;
    }
    return inv;
}

}  // namespace stefan
