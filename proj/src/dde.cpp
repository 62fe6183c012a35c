#include "stefan/dde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "stefan/numerics.hpp"

namespace stefan {

DdeSolution solve_controller_dde(double c, double D, double deltaD, const DelayLine& history,
                                 double horizon, double dt) {
    if (!(c > 0.0)) throw std::invalid_argument("solve_controller_dde: c must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("solve_controller_dde: dt must be positive");
    if (!(horizon > 0.0)) throw std::invalid_argument("solve_controller_dde: horizon must be positive");
    const double d1 = D, d2 = D + deltaD;
    if (d1 < 0.0 || d2 < 0.0) throw std::invalid_argument("solve_controller_dde: negative delay");

    // dt must resolve each positive delay and the gap between the two.
    double finest = std::numeric_limits<double>::infinity();
    if (d1 > 0.0) finest = std::min(finest, d1);
    if (d2 > 0.0) finest = std::min(finest, d2);
    if (std::abs(d2 - d1) > 0.0) finest = std::min(finest, std::abs(d2 - d1));
    if (std::isfinite(finest) && dt > finest * (1.0 + 1e-12))
        throw std::invalid_argument("solve_controller_dde: dt under-resolves the delays");

    // Zero delays contribute to the local coefficient instead of a lookup.
    double a0 = -c;
    if (d1 == 0.0) a0 += c;
    if (d2 == 0.0) a0 -= c;

    const int n = std::max(1, static_cast<int>(std::ceil(horizon / dt - 1e-9)));
    DdeSolution sol;
    sol.t.resize(static_cast<std::size_t>(n) + 1);
    sol.p.resize(static_cast<std::size_t>(n) + 1);
    sol.t[0] = 0.0;
    sol.p[0] = history.lookup(0.0);

    auto value = [&](double tau) -> double {
        if (tau <= 0.0) return history.lookup(tau);
        const double ratio = tau / dt;
        std::size_t j = static_cast<std::size_t>(ratio);
        if (j + 1 >= sol.t.size()) j = sol.t.size() - 2;
        const double w = ratio - static_cast<double>(j);
        return sol.p[j] + w * (sol.p[j + 1] - sol.p[j]);
    };
    auto rhs = [&](double t, double p) {
        double r = a0 * p;
        if (d1 > 0.0) r += c * value(t - d1);
        if (d2 > 0.0) r -= c * value(t - d2);
        return r;
    };

    sol.first_negative_time = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < n; ++i) {
        const double t = i * dt;
        const double p = sol.p[static_cast<std::size_t>(i)];
        const double f1 = rhs(t, p);
        const double pred = p + dt * f1;
        sol.p[static_cast<std::size_t>(i) + 1] = pred;  // stage value for any same-step lookups
        const double f2 = rhs(t + dt, pred);
        const double pnext = p + 0.5 * dt * (f1 + f2);
        sol.t[static_cast<std::size_t>(i) + 1] = t + dt;
        sol.p[static_cast<std::size_t>(i) + 1] = pnext;
        if (!sol.went_negative && pnext < 0.0) {
            sol.went_negative = true;
            const double denom = p - pnext;
            sol.first_negative_time = (denom > 0.0) ? t + dt * p / denom : t + dt;
        }
    }
    return sol;
}

double halanay_gamma(double delta_bar, double T2_bar) {
    const double d = std::abs(delta_bar);
    if (!(d < 1.0 / 3.0)) return std::numeric_limits<double>::quiet_NaN();
    if (d == 0.0) return 1.0;
    auto g = [&](double gamma) { return gamma + 3.0 * d * std::exp(gamma * T2_bar) - 1.0; };
    return bisect(g, 0.0, 1.0, 1e-10);
}

std::vector<ProbeResult> positivity_probe(double D, double deltaD, const std::vector<double>& gains,
                                          double q0, double horizon) {
    if (!(q0 > 0.0)) throw std::invalid_argument("positivity_probe: q0 must be positive");
    const double d2 = D + deltaD;
    if (D < 0.0 || d2 < 0.0) throw std::invalid_argument("positivity_probe: negative delay");
    const double dmax = std::max(D, d2);

    double finest = dmax;
    if (D > 0.0) finest = std::min(finest, D);
    if (d2 > 0.0) finest = std::min(finest, d2);
    if (std::abs(deltaD) > 0.0) finest = std::min(finest, std::abs(deltaD));
    const double dt = (finest > 0.0) ? finest / 40.0 : horizon / 4000.0;

    std::vector<ProbeResult> out;
    out.reserve(gains.size());
    for (double c : gains) {
        ProbeResult r;
        r.c = c;
        DdeSolution sol = [&] {
            if (dmax > 0.0) {
                DelayLine hist = DelayLine::constant_history(dmax, 0.0, q0, dt);
                hist.append(0.0, q0);
                return solve_controller_dde(c, D, deltaD, hist, horizon, dt);
            }
            DelayLine hist(1.0);
            hist.append(-1.0, q0);
            hist.append(0.0, q0);
            return solve_controller_dde(c, D, deltaD, hist, horizon, dt);
        }();
        r.positive = !sol.went_negative;
        r.first_negative_time = sol.first_negative_time;

        const double delta_bar = c * deltaD;
        const double T2_bar = c * dmax;
        const double gamma = halanay_gamma(delta_bar, T2_bar);
        r.halanay_applicable = std::isfinite(gamma);
        r.gamma = gamma;
        if (r.halanay_applicable) {
            const double Mp = q0;  // constant history
            double margin = 0.0;
            for (std::size_t i = 0; i < sol.t.size(); ++i) {
                const double env = Mp * std::exp(-gamma * c * sol.t[i]);
                margin = std::max(margin, std::abs(sol.p[i]) / env);
            }
            r.envelope_margin = margin;
            r.envelope_ok = margin <= 1.01;
        } else {
            r.envelope_margin = std::numeric_limits<double>::quiet_NaN();
            r.envelope_ok = false;
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace stefan
