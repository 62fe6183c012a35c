#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stefan {

// Composite trapezoid over (x, f) samples; x must be strictly increasing.
inline double trapz(const std::vector<double>& x, const std::vector<double>& f) {
    if (x.size() != f.size() || x.size() < 2)
        throw std::invalid_argument("trapz: need matching sample arrays of size >= 2");
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        acc += 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
    return acc;
}

inline double trapz_uniform(double h, const std::vector<double>& f) {
    if (f.size() < 2) throw std::invalid_argument("trapz_uniform: need >= 2 samples");
    double acc = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += f[i];
    return acc * h;
}

// Cumulative trapezoid anchored at the first node (out[0] = 0).
inline std::vector<double> cumtrapz(const std::vector<double>& x, const std::vector<double>& f) {
    if (x.size() != f.size() || x.empty())
        throw std::invalid_argument("cumtrapz: need matching non-empty sample arrays");
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t i = 1; i < x.size(); ++i)
        out[i] = out[i - 1] + 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
    return out;
}

// First derivative on a possibly non-uniform grid, second order:
// three-point central in the interior, one-sided three-point at the ends.
inline std::vector<double> gradient(const std::vector<double>& x, const std::vector<double>& f) {
    const std::size_t n = x.size();
    if (f.size() != n || n < 3)
        throw std::invalid_argument("gradient: need matching sample arrays of size >= 3");
    std::vector<double> out(n);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = x[i] - x[i - 1];
        const double hr = x[i + 1] - x[i];
        out[i] = -f[i - 1] * hr / (hl * (hl + hr))
                 + f[i] * (hr - hl) / (hl * hr)
                 + f[i + 1] * hl / (hr * (hl + hr));
    }
    auto onesided = [&](std::size_t a, std::size_t b, std::size_t c) {
        const double xa = x[a], xb = x[b], xc = x[c];
        return f[a] * (2.0 * xa - xb - xc) / ((xa - xb) * (xa - xc))
               + f[b] * (xa - xc) / ((xb - xa) * (xb - xc))
               + f[c] * (xa - xb) / ((xc - xa) * (xc - xb));
    };
    out[0] = onesided(0, 1, 2);
    out[n - 1] = onesided(n - 1, n - 2, n - 3);
    return out;
}

inline std::vector<double> gradient_uniform(double h, const std::vector<double>& f) {
    const std::size_t n = f.size();
    if (n < 3) throw std::invalid_argument("gradient_uniform: need >= 3 samples");
    std::vector<double> out(n);
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return out;
}

// Root of g on [lo, hi] by bisection; g(lo) and g(hi) must bracket a sign change.
template <class F>
double bisect(F&& g, double lo, double hi, double tol = 1e-10, int maxit = 200) {
    double glo = g(lo), ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo > 0.0) == (ghi > 0.0))
        throw std::invalid_argument("bisect: endpoints do not bracket a root");
    for (int it = 0; it < maxit && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm > 0.0) == (ghi > 0.0)) {
            hi = mid;
            ghi = gm;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace stefan
