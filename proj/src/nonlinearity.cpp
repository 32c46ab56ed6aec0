#include "levyfv/nonlinearity.hpp"

#include <algorithm>
#include <cmath>

namespace levyfv {

double Nonlinearity::A(double u) const {
    switch (a_type) {
        case Diffusion::none:
            return 0.0;
        case Diffusion::identity:
            return u;
        case Diffusion::porous:
            return u * std::pow(std::abs(u), porous_m - 1.0);
        case Diffusion::stairs:
            // Constant on [-1/2, 1/2], slope one outside: strongly degenerate.
            if (u > 0.5) return u - 0.5;
            if (u < -0.5) return u + 0.5;
            return 0.0;
    }
    return 0.0;
}

double Nonlinearity::lipschitz_A(double lo, double hi) const {
    switch (a_type) {
        case Diffusion::none:
            return 0.0;
        case Diffusion::identity:
            return 1.0;
        case Diffusion::porous: {
            const double m = std::max(std::abs(lo), std::abs(hi));
            return porous_m * std::pow(m, porous_m - 1.0);
        }
        case Diffusion::stairs:
            return 1.0;
    }
    return 0.0;
}

double Nonlinearity::f(double u) const {
    switch (f_type) {
        case FluxType::none:
            return 0.0;
        case FluxType::linear:
            return linear_a * u;
        case FluxType::burgers:
            return 0.5 * u * u;
    }
    return 0.0;
}

double Nonlinearity::lipschitz_f(double lo, double hi) const {
    switch (f_type) {
        case FluxType::none:
            return 0.0;
        case FluxType::linear:
            return std::abs(linear_a);
        case FluxType::burgers:
            return std::max(std::abs(lo), std::abs(hi));
    }
    return 0.0;
}

double Nonlinearity::f_plus(double u) const {
    switch (f_type) {
        case FluxType::none:
            return 0.0;
        case FluxType::linear:
            return linear_a > 0.0 ? linear_a * u : 0.0;
        case FluxType::burgers: {
            const double up = std::max(u, 0.0);
            return 0.5 * up * up;
        }
    }
    return 0.0;
}

double Nonlinearity::f_minus(double u) const {
    switch (f_type) {
        case FluxType::none:
            return 0.0;
        case FluxType::linear:
            return linear_a < 0.0 ? linear_a * u : 0.0;
        case FluxType::burgers: {
            const double um = std::min(u, 0.0);
            return 0.5 * um * um;
        }
    }
    return 0.0;
}

}  // namespace levyfv
