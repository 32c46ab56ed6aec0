#pragma once

#include <complex>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "levyfv/grid.hpp"
#include "levyfv/levy_measure.hpp"

namespace levyfv {

/// What happens to jump mass at lattice offsets beyond the stored bandwidth.
/// periodic_wrap treats the kernel as living on a torus of 2K cells per axis
/// and folds the whole lattice sum onto it; diagonal_lump keeps the kernel on
/// the infinite lattice and lumps the tail mass onto the +-K edge offsets.
enum class TruncationPolicy { periodic_wrap, diagonal_lump };

/// Metadata for the diagonal lower-bound law: which modulus sigma_hat(dx)
/// applies to this kernel's measure.
struct SigmaClass {
    bool integrable_tails = false;           // sigma_mu(s) = s; otherwise s^2
    std::optional<double> fractional_lambda; // sigma_lambda when present
    double evaluate(double dx) const;
};

/// Toeplitz weights of the discretized nonlocal operator plus upwinded drift.
/// Offsets are centered: k in [-K, K]^d, axis 0 fastest. Immutable once
/// assembled; all queries are const.
class WeightKernel {
public:
    WeightKernel() = default;
    WeightKernel(double dx, int d, int K, TruncationPolicy policy, std::vector<double> gamma,
                 std::vector<double> weights, SigmaClass sigma);

    double dx() const { return dx_; }
    int dim() const { return d_; }
    int bandwidth() const { return K_; }
    TruncationPolicy policy() const { return policy_; }
    const std::vector<double>& gamma() const { return gamma_; }
    const std::vector<int>& upwind_signs() const { return upwind_; }
    const SigmaClass& sigma_class() const { return sigma_; }

    int side() const { return 2 * K_ + 1; }
    std::size_t size() const { return g_.size(); }
    const std::vector<double>& weights() const { return g_; }

    std::size_t offset_index(int k0, int k1 = 0) const {
        return static_cast<std::size_t>(k0 + K_) +
               static_cast<std::size_t>(d_ == 2 ? (k1 + K_) * side() : 0);
    }
    double weight(int k0, int k1 = 0) const { return g_[offset_index(k0, k1)]; }
    double diagonal() const { return weight(0, 0); }

private:
    double dx_ = 1.0;
    int d_ = 1;
    int K_ = 1;
    TruncationPolicy policy_ = TruncationPolicy::periodic_wrap;
    std::vector<double> gamma_;
    std::vector<int> upwind_;
    std::vector<double> g_;
    SigmaClass sigma_;
};

struct AssembleOptions {
    /// Restrict the jump measure to band_lo < |z| <= band_hi before
    /// discretizing (the r-splitting); the dx/2 singularity cutoff is applied
    /// on top of band_lo.
    double band_lo = 0.0;
    double band_hi = std::numeric_limits<double>::infinity();
    /// diagonal_lump only: error out when the lumped tail exceeds this
    /// fraction of the total off-diagonal mass.
    double max_lump_fraction = 0.25;
};

WeightKernel assemble(const LevyMeasure& mu, double dx, int d, int K, TruncationPolicy policy,
                      const AssembleOptions& opt = {});

/// The r-splitting G = G^{.,r} + G_{.,r}: near holds jumps dx/2 < |z| <= r
/// with the compensator drift accumulated on that band, far holds |z| > r
/// with the remaining drift. Each half is upwinded by the sign of its own
/// drift, so each half separately satisfies the kernel laws.
struct SplitKernel {
    double r;
    WeightKernel near;
    WeightKernel far;
};

SplitKernel split(const LevyMeasure& mu, double dx, int d, int K, double r,
                  TruncationPolicy policy);

enum class ApplyPath { automatic, direct, fast };

/// v_alpha = sum_k g_k w_{alpha+k} with periodic indexing. The fast path is a
/// circular FFT convolution and matches the direct path to ~1e-12.
GridFunction apply(const WeightKernel& kernel, const GridFunction& w,
                   ApplyPath path = ApplyPath::automatic);

/// Reusable plan for repeated applications of one kernel at one resolution
/// (the implicit solver's inner loop).
class ApplyPlan {
public:
    ApplyPlan(const WeightKernel& kernel, int n, ApplyPath path = ApplyPath::automatic);
    void apply(const GridFunction& w, GridFunction& out) const;

private:
    const WeightKernel* kernel_;
    bool fast_ = false;
    std::vector<std::complex<double>> spec_;  // conj(FFT(folded kernel))
};

struct LawReport {
    double row_sum;               // Neumaier sum of all weights
    double worst_sign_violation;  // max(g_0, max_k(-g_k)) clipped at 0
    bool toeplitz;                // structural: weights depend on offset only
    double diagonal_product;      // |g_0| * sigma_hat(dx)
    std::optional<double> cbar;   // supplied bound, when fitting across a sweep
    bool row_sum_ok() const { return std::abs(row_sum) <= 1e-12; }
    bool sign_ok() const { return worst_sign_violation <= 0.0; }
    bool diagonal_ok() const { return !cbar || diagonal_product <= *cbar; }
    bool all_ok() const { return row_sum_ok() && sign_ok() && toeplitz && diagonal_ok(); }
};

LawReport verify_laws(const WeightKernel& kernel, std::optional<double> cbar = std::nullopt);

/// Text dump: header (dx, d, K, policy, gamma), then one offset -> weight
/// line per stored offset, 17 significant digits throughout.
void dump(const WeightKernel& kernel, std::ostream& out);
std::string dump_string(const WeightKernel& kernel);
WeightKernel load(std::istream& in);
WeightKernel load_string(const std::string& text);

}  // namespace levyfv
