#include "stefan/plant_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stefan {

PlantState init_state(const PhysicalParams& pp, double s0, double Tbar, int N) {
    if (!(s0 > 0.0) || !std::isfinite(s0))
        throw std::invalid_argument("init_state: s0 must be positive");
    if (!(Tbar >= 0.0) || !std::isfinite(Tbar))
        throw std::invalid_argument("init_state: Tbar must be non-negative");
    if (N < 2) throw std::invalid_argument("init_state: N must be >= 2");

    PlantState st;
    st.t = 0.0;
    st.s = s0;
    st.theta.resize(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) {
        const double xi = static_cast<double>(i) / N;
        st.theta[static_cast<std::size_t>(i)] = pp.Tm + Tbar * (1.0 - xi);
    }
    st.theta.back() = pp.Tm;
    return st;
}

double min_theta(const PlantState& st) {
    return *std::min_element(st.theta.begin(), st.theta.end());
}

}  // namespace stefan
