#pragma once

#include <string>

namespace levyfv {

/// The two nonlinearities of the problem: a non-decreasing Lipschitz
/// diffusion A with A(0) = 0, and a scalar flux profile f with f(0) = 0
/// applied identically along each axis.
struct Nonlinearity {
    enum class Diffusion { none, identity, porous, stairs };
    enum class FluxType { none, linear, burgers };

    Diffusion a_type = Diffusion::identity;
    double porous_m = 2.0;  // A(u) = u|u|^{m-1}, m >= 1
    FluxType f_type = FluxType::none;
    double linear_a = 1.0;  // f(u) = a u

    double A(double u) const;
    /// Lipschitz constant of A over [lo, hi].
    double lipschitz_A(double lo, double hi) const;
    double f(double u) const;
    /// Lipschitz constant of f over [lo, hi].
    double lipschitz_f(double lo, double hi) const;
    /// Engquist-Osher splitting: int_0^u max(f',0) and int_0^u min(f',0).
    double f_plus(double u) const;
    double f_minus(double u) const;

    bool has_diffusion() const { return a_type != Diffusion::none; }
    bool has_flux() const { return f_type != FluxType::none; }
};

}  // namespace levyfv
