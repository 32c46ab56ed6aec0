#pragma once

#include "levyfv/nonlinearity.hpp"

namespace levyfv {

/// Monotone two-point numerical fluxes: consistent (fhat(u,u) = f(u)),
/// non-decreasing in the first argument, non-increasing in the second.
struct NumericalFlux {
    enum class Type { engquist_osher, lax_friedrichs, godunov };
    Type type = Type::engquist_osher;
    double lf_c = 1.0;  // Lax-Friedrichs dissipation, >= L_F on the data range
};

double eval_flux(const NumericalFlux& flux, const Nonlinearity& nonlin, double a, double b);

}  // namespace levyfv
