#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace levyfv {

/// dmu = c |z|^{-d-lambda} dz, lambda in (0,2), c > 0. Symmetric; any dimension.
struct PowerLaw {
    double lambda;
    double c;
};

/// Two-sided tempered stable density (d = 1):
///   C e^{-G z} z^{-1-Y}   for z > 0,
///   C e^{-M|z|}|z|^{-1-Y} for z < 0.
struct Cgmy {
    double C, G, M, Y;
};

struct Atom {
    double z;
    double w;
};

/// Finite sum of point masses w_i at z_i != 0 (d = 1).
struct Atomic {
    std::vector<Atom> atoms;
};

/// Density samples on a strictly increasing grid excluding zero (d = 1).
/// Log-density is interpolated linearly in log|z| between same-sign samples
/// (plain linear when a sample density vanishes); zero outside the sampled
/// range and across the sign gap.
struct Tabulated {
    std::vector<double> z;
    std::vector<double> rho;
};

/// The three tail integrals the schemes and error bounds are built from.
struct TailMoments {
    double r;
    double mass;                // mu(|z| > r)
    double first_moment_to_one; // int_{r<|z|<=1} |z| dmu
    double second_moment_in;    // int_{|z|<=r} |z|^2 dmu
};

/// A jump measure satisfying int |z|^2 ^ 1 dmu < infty, immutable after
/// construction. All queries are pure and safe to call concurrently.
class LevyMeasure {
public:
    using Variant = std::variant<PowerLaw, Cgmy, Atomic, Tabulated>;

    LevyMeasure(Variant v, int dimension = 1);

    static LevyMeasure power_law(double lambda, double c, int dimension = 1);
    static LevyMeasure cgmy(double C, double G, double M, double Y);
    static LevyMeasure atomic(std::vector<Atom> atoms);
    static LevyMeasure tabulated(std::vector<double> z, std::vector<double> rho);
    static LevyMeasure tabulated_from_file(const std::string& path);

    /// Re-runs the construction checks; throws InvalidMeasure/DivergentMoment.
    void validate() const;

    int dimension() const { return d_; }
    const Variant& variant() const { return v_; }
    bool symmetric() const { return symmetric_; }

    /// True when int |z|^1 dmu < infty near zero, i.e. sigma_mu(s) = s applies.
    bool integrable_small_jumps() const;

    /// lambda for the fractional family (PowerLaw order, CGMY Y); nullopt otherwise.
    std::optional<double> fractional_order() const;

    TailMoments tail_moments(double r) const;

    /// gamma_l = -int_{|z|>r} z_l 1_{|z|<1} dmu (strict indicator; length d).
    /// Exactly zero for symmetric variants, without quadrature.
    std::vector<double> gamma_drift(double r) const;

    /// psi(xi) = int (e^{i xi z} - 1 - i xi z 1_{|z|<1}) dmu, d = 1 only.
    std::complex<double> symbol(double xi) const;

    // --- banded queries used by weight assembly and the reference oracle ---
    // Bands are half-open away from the origin: {z : side z > 0, a < |z| <= b}.
    // These cover the continuous part only; point masses come from atoms().

    /// mu_cont of the band; b may be +infinity.
    double cont_mass(int side, double a, double b) const;
    /// int |z| dmu_cont over the band; b may be +infinity when convergent.
    double cont_abs_moment(int side, double a, double b) const;
    /// int |z|^2 dmu_cont over the band (finite b).
    double cont_abs2_moment(int side, double a, double b) const;
    /// Continuous density at signed z (zero for Atomic).
    double density(double z) const;
    /// Radial density c s^{-d-lambda} for PowerLaw in dimension d.
    double radial_density(double s) const;

    const std::vector<Atom>& atoms() const { return atoms_; }

    /// Sum of density images sum_{m>=1} rho(m L + w) (pos side) and/or
    /// rho(m L - w) (neg side) for |w| < L; exact lattice tail for the
    /// periodized kernel. Hurwitz-zeta accelerated for PowerLaw.
    double wrapped_density(double w, double period, bool pos_images, bool neg_images) const;

    /// Radius beyond which the remaining mass is <= tol (used to cut far-field
    /// summation for light-tailed variants; may be huge for PowerLaw).
    double reach(double tol) const;

private:
    void check() const;

    Variant v_;
    int d_;
    bool symmetric_;
    std::vector<Atom> atoms_;  // empty unless Atomic
};

/// Spec-level free function: returns normally iff the measure is admissible.
inline void validate(const LevyMeasure& m) { m.validate(); }

}  // namespace levyfv
