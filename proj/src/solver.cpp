#include "stefan/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace stefan {

double interface_velocity(const PlantState& st, const PhysicalParams& pp) {
    const int N = st.n();
    if (N < 3) throw std::invalid_argument("interface_velocity: need N >= 3");
    const double h = 1.0 / N;
    const auto& th = st.theta;
    const double du = (3.0 * th[N] - 4.0 * th[N - 1] + th[N - 2]) / (2.0 * h);
    return -(pp.beta / st.s) * du;
}

StepReport step(PlantState& st, const DelayLine& inputs, const PhysicalParams& pp,
                const ScenarioConfig& cfg) {
    const int N = st.n();
    if (N != cfg.N) throw std::invalid_argument("step: state resolution disagrees with config");
    if (N < 3) throw std::invalid_argument("step: need N >= 3");

    const double h = 1.0 / N;
    const double delay = cfg.plant_delay();
    const double t_end = st.t + cfg.dt;

    StepReport rep;
    std::vector<double> next(st.theta.size());

    // A collapsing interface shrinks the stable sub-step quadratically, so a dying
    // run would otherwise spin here instead of reporting the collapse.
    constexpr int kSubstepBudget = 1000000;

    while (st.t < t_end) {
        if (rep.substeps >= kSubstepBudget)
            throw std::runtime_error("step: domain collapse (sub-step budget exhausted)");
        const double remaining = t_end - st.t;
        // Largest stable explicit sub-step at the current interface position.
        const double dt_cap = 0.5 * st.s * st.s / (pp.alpha * N * N);
        double dts = std::min(remaining, dt_cap);
        if (remaining <= dt_cap * (1.0 + 1e-12)) dts = remaining;

        const double q_app = (delay == 0.0)
                                 ? inputs.back_value()
                                 : inputs.lookup(st.t + 0.5 * dts - delay);

        const double s = st.s;
        const double sdot = interface_velocity(st, pp);
        const double diff = pp.alpha / (s * s);
        const double adv = sdot / s;
        const auto& th = st.theta;

        // Ghost-node Neumann closure: u_xi(0) = -q_app * s / k.
        const double g = -q_app * s / pp.k;
        next[0] = th[0] + dts * diff * (2.0 * th[1] - 2.0 * th[0] - 2.0 * h * g) / (h * h);
        for (int i = 1; i < N; ++i) {
            const double lap = (th[i + 1] - 2.0 * th[i] + th[i - 1]) / (h * h);
            const double gradc = (th[i + 1] - th[i - 1]) / (2.0 * h);
            const double xi = static_cast<double>(i) * h;
            next[i] = th[i] + dts * (diff * lap + xi * adv * gradc);
        }
        next[N] = pp.Tm;

        const double s_new = s + dts * sdot;
        if (!(s_new > 0.0)) throw std::runtime_error("step: domain collapse (s <= 0)");

        double checksum = s_new;
        for (double v : next) checksum += v;
        if (!std::isfinite(checksum)) throw std::runtime_error("step: numerical blow-up (non-finite state)");

        st.theta.swap(next);
        st.s = s_new;
        st.t += dts;

        rep.substeps += 1;
        rep.applied_flux = q_app;
        rep.dt_used = std::max(rep.dt_used, dts);
        rep.stability_margin = std::max(rep.stability_margin, pp.alpha * dts * N * N / (s * s));
    }
    st.t = t_end;
    rep.sdot = interface_velocity(st, pp);
    return rep;
}

}  // namespace stefan
