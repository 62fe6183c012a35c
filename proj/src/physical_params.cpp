#include "stefan/physical_params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stefan {

PhysicalParams derive_params(double rho, double cp, double k, double dH, double Tm) {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string("derive_params: ") + name + " must be positive and finite");
    };
    positive(rho, "rho");
    positive(cp, "cp");
    positive(k, "k");
    positive(dH, "dH");
    if (!std::isfinite(Tm)) throw std::invalid_argument("derive_params: Tm must be finite");

    PhysicalParams p;
    p.rho = rho;
    p.cp = cp;
    p.k = k;
    p.dH = dH;
    p.Tm = Tm;
    p.alpha = k / (rho * cp);
    p.beta = k / (rho * dH);
    return p;
}

}  // namespace stefan
