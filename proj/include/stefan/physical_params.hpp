#pragma once

namespace stefan {

// Material constants for the liquid phase plus the derived transport groups:
// alpha = k / (rho * cp), the thermal diffusivity [m^2/s], and beta = k / (rho * dH)
// [m^2/(K s)], which turns the interface temperature gradient into the interface
// speed, sdot = -beta T_x(s).
struct PhysicalParams {
    double rho = 0.0;   // density [kg/m^3]
    double cp = 0.0;    // specific heat [J/(kg K)]
    double k = 0.0;     // thermal conductivity [W/(m K)]
    double dH = 0.0;    // latent heat of fusion [J/kg]
    double Tm = 0.0;    // melting temperature [K]
    double alpha = 0.0; // derived diffusivity
    double beta = 0.0;  // derived interface gain
};

// Validates the raw constants and fills in alpha, beta.
PhysicalParams derive_params(double rho, double cp, double k, double dH, double Tm);

}  // namespace stefan
