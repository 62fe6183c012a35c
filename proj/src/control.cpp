#include "stefan/control.hpp"

#include <cmath>
#include <stdexcept>

namespace stefan {

double thermal_integral(const PlantState& st, const PhysicalParams& pp) {
    const int N = st.n();
    const double h = 1.0 / N;
    double acc = 0.5 * ((st.theta[0] - pp.Tm) + (st.theta[static_cast<std::size_t>(N)] - pp.Tm));
    for (int i = 1; i < N; ++i) acc += st.theta[static_cast<std::size_t>(i)] - pp.Tm;
    return acc * h * st.s;
}

ControlOutput nominal_law(const PlantState& st, const PhysicalParams& pp, double c, double s_r) {
    ControlOutput out;
    out.stored_term = 0.0;
    out.thermal_term = (pp.k / pp.alpha) * thermal_integral(st, pp);
    out.interface_term = (pp.k / pp.beta) * (st.s - s_r);
    out.q_c = -c * (out.thermal_term + out.interface_term);
    return out;
}

ControlOutput compensated_law(const PlantState& st, const DelayLine& inputs,
                              const PhysicalParams& pp, double c, double s_r, double D) {
    ControlOutput out = nominal_law(st, pp, c, s_r);
    out.stored_term = (D > 0.0) ? inputs.integral(st.t - D, st.t) : 0.0;
    out.q_c = -c * (out.stored_term + out.thermal_term + out.interface_term);
    return out;
}

ControlOutput commit_compensated(const PlantState& st, DelayLine& inputs,
                                 const PhysicalParams& pp, double c, double s_r, double D) {
    ControlOutput out = nominal_law(st, pp, c, s_r);
    const double t = st.t;
    const double tb = inputs.back_time();
    if (!(t > tb)) throw std::invalid_argument("commit_compensated: time must advance past the last sample");
    if (D > 0.0) {
        // Solve q = -c (I_head + (w/2)(q_b + q) + A) for the closing trapezoid panel.
        const double w = t - tb;
        const double head = (t - D < tb) ? inputs.integral(t - D, tb) : 0.0;
        const double A = out.thermal_term + out.interface_term;
        const double q = -c * (head + 0.5 * w * inputs.back_value() + A) / (1.0 + 0.5 * c * w);
        inputs.append(t, q);
        out.stored_term = inputs.integral(t - D, t);
        out.q_c = q;
    } else {
        out.q_c = -c * (out.thermal_term + out.interface_term);
        inputs.append(t, out.q_c);
    }
    return out;
}

ControlOutput commit_nominal(const PlantState& st, DelayLine& inputs, const PhysicalParams& pp,
                             double c, double s_r) {
    ControlOutput out = nominal_law(st, pp, c, s_r);
    inputs.append(st.t, out.q_c);
    return out;
}

double setpoint_min(const PlantState& st, const DelayLine& inputs, const PhysicalParams& pp,
                    double D) {
    const double hist = (D > 0.0) ? inputs.integral(st.t - D, st.t) / pp.k : 0.0;
    const double therm = thermal_integral(st, pp) / pp.alpha;
    return st.s + pp.beta * (hist + therm);
}

double total_energy(const PlantState& st, const DelayLine& inputs, const PhysicalParams& pp,
                    double D) {
    const double stored = (D > 0.0) ? inputs.integral(st.t - D, st.t) : 0.0;
    return (pp.k / pp.alpha) * thermal_integral(st, pp) + (pp.k / pp.beta) * st.s + stored;
}

}  // namespace stefan
