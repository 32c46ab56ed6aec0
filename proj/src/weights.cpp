#include "levyfv/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "levyfv/errors.hpp"
#include "levyfv/fft.hpp"
#include "levyfv/quadrature.hpp"
#include "levyfv/special.hpp"

namespace levyfv {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double tent(double w, double dx) { return std::max(0.0, dx - std::abs(w)); }
}  // namespace

double SigmaClass::evaluate(double dx) const {
    if (fractional_lambda) {
        const double l = *fractional_lambda;
        if (l > 1.0) return std::pow(dx, l);
        if (l == 1.0) return dx / std::abs(std::log(dx));
        return dx;
    }
    return integrable_tails ? dx : dx * dx;
}

WeightKernel::WeightKernel(double dx, int d, int K, TruncationPolicy policy,
                           std::vector<double> gamma, std::vector<double> weights,
                           SigmaClass sigma)
    : dx_(dx), d_(d), K_(K), policy_(policy), gamma_(std::move(gamma)), g_(std::move(weights)),
      sigma_(sigma) {
    if (d_ < 1 || d_ > 2) throw ShapeMismatch("kernel dimension must be 1 or 2");
    if (K_ < 1) throw ShapeMismatch("bandwidth must be >= 1");
    const std::size_t expect = static_cast<std::size_t>(side()) * (d_ == 2 ? side() : 1);
    if (g_.size() != expect) throw ShapeMismatch("weight storage does not match bandwidth");
    upwind_.resize(static_cast<std::size_t>(d_));
    for (int l = 0; l < d_; ++l) upwind_[static_cast<size_t>(l)] = gamma_[static_cast<size_t>(l)] > 0.0 ? +1 : -1;
}

namespace {

// ---------------------------------------------------------------------------
// d = 1 assembly.
//
// Off-diagonal weight at offset k reduces to a single integral against the
// triangular overlap T_dx(z - k dx), restricted to |z| > dx/2 and to the
// requested measure band. The half-tent pieces are linear in z, so each needs
// only the band mass and band first |z|-moment of the measure.
// ---------------------------------------------------------------------------

struct Band {
    double lo, hi;  // measure restricted to lo < |z| <= hi
};

// int over (a, b] of (z - z0) dmu_cont on one side, in |z| coordinates.
double ramp_up(const LevyMeasure& mu, int side, double a, double b, double z0) {
    if (!(b > a)) return 0.0;
    return mu.cont_abs_moment(side, a, b) - z0 * mu.cont_mass(side, a, b);
}
// int over (a, b] of (z1 - z) dmu_cont.
double ramp_down(const LevyMeasure& mu, int side, double a, double b, double z1) {
    if (!(b > a)) return 0.0;
    return z1 * mu.cont_mass(side, a, b) - mu.cont_abs_moment(side, a, b);
}

// Continuous m = 0 tent weight at |offset| = k on one side, band-restricted.
double tent_weight_cont(const LevyMeasure& mu, int side, int k, double dx, const Band& band) {
    const double y = k * dx;
    const double lo = std::max(y - dx, band.lo);
    const double hi = std::min(y + dx, band.hi);
    double acc = 0.0;
    acc += ramp_up(mu, side, lo, std::min(y, hi), y - dx);
    acc += ramp_down(mu, side, std::max(y, lo), hi, y + dx);
    return acc / dx;
}

// Wrapped-image tent weight: integrates T(w - y) against the lattice tail of
// the density (all images |m| >= 1 on the requested side progressions).
double tent_weight_wrapped(const LevyMeasure& mu, double y, double dx, double period,
                           bool pos_images, bool neg_images) {
    auto f = [&](double w) {
        return tent(w - y, dx) * mu.wrapped_density(w, period, pos_images, neg_images);
    };
    return (quad::gauss_legendre_12(f, y - dx, y) + quad::gauss_legendre_12(f, y, y + dx)) / dx;
}

// Tail of the one-sided band beyond the outermost kept tent: the linear ramp
// on ((K)dx, (K+1)dx] plus everything above, i.e. sum_{k>K} g_k on this side.
double side_tail_mass(const LevyMeasure& mu, int side, int K, double dx, const Band& band) {
    const double edge = K * dx;
    const double a = std::max(edge, band.lo);
    const double b = std::min(edge + dx, band.hi);
    double acc = ramp_up(mu, side, a, b, edge) / dx;
    acc += mu.cont_mass(side, std::max(edge + dx, band.lo), band.hi);
    for (const auto& atom : mu.atoms()) {
        const double s = std::abs(atom.z);
        if ((side > 0) != (atom.z > 0.0)) continue;
        if (!(s > band.lo && s <= band.hi)) continue;
        if (s > edge && s <= edge + dx) acc += atom.w * (s - edge) / dx;
        else if (s > edge + dx) acc += atom.w;
    }
    return acc;
}

// gamma for the band: -int_{band, |z|<1} z dmu with the strict indicator.
double banded_gamma(const LevyMeasure& mu, const Band& band) {
    if (mu.symmetric()) return 0.0;
    const double hi = std::min(band.hi, 1.0);
    double moment = 0.0;
    if (hi > band.lo) {
        moment += mu.cont_abs_moment(+1, band.lo, hi);
        moment -= mu.cont_abs_moment(-1, band.lo, hi);
    }
    for (const auto& atom : mu.atoms()) {
        const double s = std::abs(atom.z);
        if (s > band.lo && s <= band.hi && s < 1.0) moment += atom.z * atom.w;
    }
    return -moment;
}

int reduce_offset(long long k, int N) {
    long long r = k % N;
    if (r < 0) r += N;                 // r in [0, N)
    if (2 * r > N) r -= N;             // centered; r == N/2 stays +N/2
    return static_cast<int>(r);
}

std::vector<double> assemble_1d(const LevyMeasure& mu, double dx, int K, TruncationPolicy policy,
                                const AssembleOptions& opt, double* gamma_out) {
    const int side_len = 2 * K + 1;
    std::vector<double> g(static_cast<std::size_t>(side_len), 0.0);
    const Band band{std::max(opt.band_lo, 0.5 * dx), opt.band_hi};
    const double period = 2.0 * K * dx;

    const bool wrap = policy == TruncationPolicy::periodic_wrap;
    if (wrap && std::isfinite(band.hi)) {
        if (band.hi > 0.5 * period - dx)
            throw OutOfRange("banded wrap assembly requires band_hi <= L/2 - dx");
        if (band.hi > K * dx)
            throw BandwidthTooSmall("finite band reaches beyond the stored tents");
    }
    const bool wrap_images = wrap && !std::isfinite(band.hi);
    if (wrap_images && band.lo > 0.5 * period - dx) {
        throw OutOfRange("wrap assembly requires the band to start inside the torus");
    }

    // Continuous part, offset by offset.
    for (int k = 1; k <= K; ++k) {
        double gp = tent_weight_cont(mu, +1, k, dx, band);
        double gm = tent_weight_cont(mu, -1, k, dx, band);
        if (wrap_images) {
            // Interior offsets collect both image progressions; the two edge
            // offsets +-K split the shared torus cell by progression sign.
            const bool edge = (k == K);
            gp += tent_weight_wrapped(mu, k * dx, dx, period, true, !edge);
            gm += tent_weight_wrapped(mu, -k * dx, dx, period, !edge, true);
        }
        g[static_cast<std::size_t>(K + k)] += gp;
        g[static_cast<std::size_t>(K - k)] += gm;
    }

    // Atoms: place each point mass on its two neighbouring tents. Mass that
    // lands on the diagonal cell (self-overlap, or wrap images at offset
    // multiples of the period) is not placed; the row-sum identity below
    // assigns it to g_0 with the right sign.
    for (const auto& atom : mu.atoms()) {
        const double s = std::abs(atom.z);
        if (!(s > band.lo && s <= band.hi) || atom.w == 0.0) continue;
        const long long q0 = static_cast<long long>(std::floor(atom.z / dx));
        for (long long qq : {q0, q0 + 1}) {
            const double t = tent(atom.z - static_cast<double>(qq) * dx, dx);
            if (t <= 0.0 || qq == 0) continue;
            int idx;
            if (wrap) {
                const int red = reduce_offset(qq, 2 * K);
                idx = (std::abs(red) == K) ? (qq > 0 ? K : -K) : red;
            } else {
                idx = static_cast<int>(std::clamp<long long>(qq, -K, K));
            }
            if (idx == 0) continue;
            g[static_cast<std::size_t>(K + idx)] += atom.w * t / dx;
        }
    }

    double lumped = 0.0;
    if (!wrap) {
        // Tail mass beyond the kept band, lumped onto the edge offsets so the
        // row sum stays zero under truncation.
        const double sp = side_tail_mass(mu, +1, K, dx, band);
        const double sm = side_tail_mass(mu, -1, K, dx, band);
        g[static_cast<std::size_t>(2 * K)] += sp;
        g[0] += sm;
        lumped = sp + sm;
    } else {
        // Wrapped atoms beyond the principal window already landed on their
        // reduced offsets above; wrapped diagonal contributions (offset
        // multiples of the period) are covered by the row-sum identity.
    }

    // Diagonal from the exact row-sum identity sum_{k in Z} g_k = 0. Under
    // wrapping the identity regroups by torus offset, so the negation of the
    // stored off-diagonals equals g_0 plus the wrapped mass landing on the
    // diagonal cell. The independent -min(|z|,dx) integral for g_0 is
    // cross-checked in the tests.
    special::NeumaierSum offdiag;
    for (int k = -K; k <= K; ++k) {
        if (k == 0) continue;
        offdiag.add(g[static_cast<std::size_t>(K + k)]);
    }
    g[static_cast<std::size_t>(K)] = -offdiag.value();

    if (!wrap) {
        const double total_offdiag = offdiag.value();
        if (lumped > opt.max_lump_fraction * total_offdiag && total_offdiag > 0.0) {
            throw BandwidthTooSmall("lumped tail mass " + std::to_string(lumped) + " exceeds " +
                                    std::to_string(opt.max_lump_fraction) +
                                    " of the off-diagonal mass");
        }
    }

    // Upwinded drift: +|gamma|/dx on the upwind neighbour, -|gamma|/dx on the
    // diagonal. Pure atomic measures at |z| >= 1 carry no compensator.
    const double gamma = banded_gamma(mu, band);
    if (gamma != 0.0) {
        const int up = gamma > 0.0 ? +1 : -1;
        g[static_cast<std::size_t>(K + up)] += std::abs(gamma) / dx;
        g[static_cast<std::size_t>(K)] -= std::abs(gamma) / dx;
    }
    *gamma_out = gamma;
    return g;
}

// ---------------------------------------------------------------------------
// d = 2 assembly (radially symmetric PowerLaw): product-of-tents overlap by
// tensorized quadrature, excluding the disc |z| <= dx/2.
// ---------------------------------------------------------------------------

double tent2_integral(const LevyMeasure& mu, double y0, double y1, double dx, double clip_r) {
    // int T(z0-y0) T(z1-y1) rho(|z|) dz over the tent square, |z| > clip_r.
    auto inner = [&](double z0) -> double {
        auto f1 = [&](double z1) {
            const double s = std::hypot(z0, z1);
            if (s <= clip_r) return 0.0;
            return tent(z1 - y1, dx) * mu.radial_density(s);
        };
        double lo = y1 - dx, hi = y1 + dx;
        double acc = 0.0;
        if (std::abs(z0) < clip_r) {
            const double cut = std::sqrt(clip_r * clip_r - z0 * z0);
            if (-cut > lo) acc += quad::integrate(f1, lo, std::min(-cut, hi), 1e-9, 1e-14, 600);
            if (cut < hi) acc += quad::integrate(f1, std::max(cut, lo), hi, 1e-9, 1e-14, 600);
        } else {
            acc = quad::integrate(f1, lo, std::min(y1, hi), 1e-9, 1e-14, 600) +
                  quad::integrate(f1, std::max(y1, lo), hi, 1e-9, 1e-14, 600);
        }
        return tent(z0 - y0, dx) * acc;
    };
    return quad::integrate(inner, y0 - dx, y0, 1e-8, 1e-13, 400) +
           quad::integrate(inner, y0, y0 + dx, 1e-8, 1e-13, 400);
}

std::vector<double> assemble_2d(const LevyMeasure& mu, double dx, int K, TruncationPolicy policy,
                                const AssembleOptions& opt) {
    if (!std::get_if<PowerLaw>(&mu.variant()))
        throw InvalidMeasure("d = 2 assembly supports the radial PowerLaw measure only");
    if (std::isfinite(opt.band_hi) || opt.band_lo > 0.0)
        throw OutOfRange("band-restricted assembly is d = 1 only");
    const int n_side = 2 * K + 1;
    std::vector<double> g(static_cast<std::size_t>(n_side) * n_side, 0.0);
    const double clip = 0.5 * dx;
    const double dx2 = dx * dx;
    const double period = 2.0 * K * dx;

    auto at = [&](int k0, int k1) -> double& {
        return g[static_cast<std::size_t>(k0 + K) + static_cast<std::size_t>(k1 + K) * n_side];
    };

    double captured = 0.0;  // total tent-captured mass including the diagonal tent
    for (int k1 = -K; k1 <= K; ++k1) {
        for (int k0 = -K; k0 <= K; ++k0) {
            const double w = tent2_integral(mu, k0 * dx, k1 * dx, dx, clip) / dx2;
            captured += w;
            if (k0 != 0 || k1 != 0) at(k0, k1) = w;
        }
    }
    const double diag_tent = tent2_integral(mu, 0.0, 0.0, dx, clip) / dx2;

    // Lattice images / truncation remainder. For wrap the near images are
    // folded explicitly; the (tiny) residue and the lump tail are spread per
    // policy so that the row-sum identity below stays exact.
    const auto* pl = std::get_if<PowerLaw>(&mu.variant());
    const double sig = special::unit_sphere_area(2) * pl->c;
    const double total_mass = sig * std::pow(clip, -pl->lambda) / pl->lambda;
    double remainder = total_mass - captured;
    if (remainder < 0.0) remainder = 0.0;

    if (policy == TruncationPolicy::periodic_wrap) {
        const int folds = 10;
        double folded = 0.0;
        for (int m1 = -folds; m1 <= folds; ++m1) {
            for (int m0 = -folds; m0 <= folds; ++m0) {
                if (m0 == 0 && m1 == 0) continue;
                // Image of the whole principal window: weight lands on the
                // offset congruent to the image position.
                for (int k1 = -K; k1 < K; ++k1) {
                    for (int k0 = -K; k0 < K; ++k0) {
                        const double y0 = k0 * dx + m0 * period;
                        const double y1 = k1 * dx + m1 * period;
                        const double s = std::hypot(y0, y1);
                        if (s < 0.75 * period) continue;  // already inside the window
                        // far-field: tent integral ~ dx^2 * rho(center)
                        const double w = mu.radial_density(s);
                        if (w * dx2 < 1e-18) continue;
                        at(k0, k1) += w * dx2;
                        folded += w * dx2;
                    }
                }
            }
        }
        remainder = std::max(0.0, remainder - folded);
        // Spread the residue uniformly over all torus offsets (the far field
        // is flat at this scale); keeps signs and the row sum intact.
        const double share = remainder / static_cast<double>(n_side * n_side - 1);
        for (int k1 = -K; k1 <= K; ++k1)
            for (int k0 = -K; k0 <= K; ++k0)
                if (k0 != 0 || k1 != 0) at(k0, k1) += share;
    } else {
        // Lump the tail onto the edge ring.
        std::vector<std::pair<int, int>> ring;
        for (int k = -K; k <= K; ++k) {
            ring.push_back({k, -K});
            ring.push_back({k, K});
            if (k != -K && k != K) {
                ring.push_back({-K, k});
                ring.push_back({K, k});
            }
        }
        const double share = remainder / static_cast<double>(ring.size());
        for (auto [k0, k1] : ring) at(k0, k1) += share;
        const double offdiag_mass = total_mass - diag_tent;
        if (remainder > opt.max_lump_fraction * offdiag_mass) {
            throw BandwidthTooSmall("d = 2 lumped tail exceeds the configured fraction");
        }
    }

    special::NeumaierSum offdiag;
    for (int k1 = -K; k1 <= K; ++k1)
        for (int k0 = -K; k0 <= K; ++k0)
            if (k0 != 0 || k1 != 0) offdiag.add(at(k0, k1));
    at(0, 0) = -offdiag.value();
    return g;
}

}  // namespace

WeightKernel assemble(const LevyMeasure& mu, double dx, int d, int K, TruncationPolicy policy,
                      const AssembleOptions& opt) {
    if (!(dx > 0.0)) throw ShapeMismatch("cell width must be positive");
    if (K < 1) throw ShapeMismatch("bandwidth must be >= 1");
    if (d != mu.dimension()) throw ShapeMismatch("kernel dimension must match the measure");
    SigmaClass sigma{mu.integrable_small_jumps(), mu.fractional_order()};
    if (d == 1) {
        double gamma = 0.0;
        auto g = assemble_1d(mu, dx, K, policy, opt, &gamma);
        return WeightKernel(dx, 1, K, policy, {gamma}, std::move(g), sigma);
    }
    auto g = assemble_2d(mu, dx, K, policy, opt);
    return WeightKernel(dx, 2, K, policy, {0.0, 0.0}, std::move(g), sigma);
}

SplitKernel split(const LevyMeasure& mu, double dx, int d, int K, double r,
                  TruncationPolicy policy) {
    if (d != 1) throw OutOfRange("the r-splitting is provided in d = 1");
    AssembleOptions near_opt;
    near_opt.band_lo = 0.0;
    near_opt.band_hi = std::max(r, 0.5 * dx);  // r < dx/2 leaves the near band empty
    AssembleOptions far_opt;
    far_opt.band_lo = std::max(r, 0.5 * dx);
    SplitKernel out{r, assemble(mu, dx, d, K, policy, near_opt),
                    assemble(mu, dx, d, K, policy, far_opt)};
    return out;
}

namespace {

GridFunction apply_direct(const WeightKernel& k, const GridFunction& w) {
    GridFunction v(w.dim(), w.n(), w.dx(), w.origin());
    const int K = k.bandwidth();
    if (k.dim() == 1) {
        const int n = w.n();
        for (int a = 0; a < n; ++a) {
            double acc = 0.0;
            for (int off = -K; off <= K; ++off) {
                acc += k.weight(off) * w.at(a + off);
            }
            v[static_cast<std::size_t>(a)] = acc;
        }
    } else {
        const int n = w.n();
        for (int a1 = 0; a1 < n; ++a1) {
            for (int a0 = 0; a0 < n; ++a0) {
                double acc = 0.0;
                for (int o1 = -K; o1 <= K; ++o1)
                    for (int o0 = -K; o0 <= K; ++o0)
                        acc += k.weight(o0, o1) * w.at(a0 + o0, a1 + o1);
                v.at(a0, a1) = acc;
            }
        }
    }
    return v;
}

bool fast_eligible(const WeightKernel& k, int n) {
    return k.dim() == 1 && fft::is_pow2(static_cast<std::size_t>(n));
}

std::vector<std::complex<double>> kernel_spectrum(const WeightKernel& k, int n) {
    std::vector<std::complex<double>> h(static_cast<std::size_t>(n), {0.0, 0.0});
    const int K = k.bandwidth();
    for (int off = -K; off <= K; ++off) {
        const int idx = ((off % n) + n) % n;
        h[static_cast<std::size_t>(idx)] += k.weight(off);
    }
    fft::transform(h, false);
    for (auto& c : h) c = std::conj(c);
    return h;
}

GridFunction apply_fast(const WeightKernel& k, const GridFunction& w,
                        const std::vector<std::complex<double>>& spec) {
    const int n = w.n();
    std::vector<std::complex<double>> W(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) W[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)];
    fft::transform(W, false);
    for (int i = 0; i < n; ++i) W[static_cast<std::size_t>(i)] *= spec[static_cast<std::size_t>(i)];
    fft::transform(W, true);
    GridFunction v(w.dim(), n, w.dx(), w.origin());
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = W[static_cast<std::size_t>(i)].real();
    return v;
}

}  // namespace

GridFunction apply(const WeightKernel& kernel, const GridFunction& w, ApplyPath path) {
    if (kernel.dx() != w.dx()) throw ShapeMismatch("kernel and grid cell widths differ");
    if (kernel.dim() != w.dim()) throw ShapeMismatch("kernel and grid dimensions differ");
    const bool want_fast =
        path == ApplyPath::fast ||
        (path == ApplyPath::automatic && fast_eligible(kernel, w.n()) && w.n() >= 256);
    if (want_fast) {
        if (!fast_eligible(kernel, w.n()))
            throw ShapeMismatch("fast apply path requires d = 1 and a power-of-two lattice");
        return apply_fast(kernel, w, kernel_spectrum(kernel, w.n()));
    }
    return apply_direct(kernel, w);
}

ApplyPlan::ApplyPlan(const WeightKernel& kernel, int n, ApplyPath path) : kernel_(&kernel) {
    fast_ = path == ApplyPath::fast ||
            (path == ApplyPath::automatic && fast_eligible(kernel, n) && n >= 256);
    if (fast_) spec_ = kernel_spectrum(kernel, n);
}

void ApplyPlan::apply(const GridFunction& w, GridFunction& out) const {
    if (fast_) {
        out = apply_fast(*kernel_, w, spec_);
    } else {
        out = apply_direct(*kernel_, w);
    }
}

LawReport verify_laws(const WeightKernel& kernel, std::optional<double> cbar) {
    LawReport rep{};
    special::NeumaierSum sum;
    const int K = kernel.bandwidth();
    double worst = 0.0;
    if (kernel.dim() == 1) {
        for (int k = -K; k <= K; ++k) {
            if (k == 0) continue;
            sum.add(kernel.weight(k));
            worst = std::max(worst, -kernel.weight(k));
        }
    } else {
        for (int k1 = -K; k1 <= K; ++k1)
            for (int k0 = -K; k0 <= K; ++k0) {
                if (k0 == 0 && k1 == 0) continue;
                sum.add(kernel.weight(k0, k1));
                worst = std::max(worst, -kernel.weight(k0, k1));
            }
    }
    worst = std::max(worst, kernel.diagonal());
    sum.add(kernel.diagonal());
    rep.row_sum = sum.value();
    rep.worst_sign_violation = worst;
    rep.toeplitz = true;  // weights are stored per offset by construction
    rep.diagonal_product = std::abs(kernel.diagonal()) * kernel.sigma_class().evaluate(kernel.dx());
    rep.cbar = cbar;
    return rep;
}

namespace {
std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}
}  // namespace

void dump(const WeightKernel& kernel, std::ostream& out) {
    out << "dx " << fmt17(kernel.dx()) << "\n";
    out << "d " << kernel.dim() << "\n";
    out << "K " << kernel.bandwidth() << "\n";
    out << "policy "
        << (kernel.policy() == TruncationPolicy::periodic_wrap ? "periodic_wrap" : "diagonal_lump")
        << "\n";
    out << "gamma";
    for (double g : kernel.gamma()) out << ' ' << fmt17(g);
    out << "\n";
    const int K = kernel.bandwidth();
    if (kernel.dim() == 1) {
        for (int k = -K; k <= K; ++k) out << k << ' ' << fmt17(kernel.weight(k)) << "\n";
    } else {
        for (int k1 = -K; k1 <= K; ++k1)
            for (int k0 = -K; k0 <= K; ++k0)
                out << k0 << ' ' << k1 << ' ' << fmt17(kernel.weight(k0, k1)) << "\n";
    }
}

std::string dump_string(const WeightKernel& kernel) {
    std::ostringstream ss;
    dump(kernel, ss);
    return ss.str();
}

WeightKernel load(std::istream& in) {
    auto fail = [](const std::string& why) -> void { throw ShapeMismatch("kernel load: " + why); };
    std::string key;
    double dx = 0.0;
    int d = 0, K = 0;
    std::string policy_name;
    std::vector<double> gamma;
    if (!(in >> key >> dx) || key != "dx") fail("expected 'dx <value>'");
    if (!(in >> key >> d) || key != "d") fail("expected 'd <dim>'");
    if (!(in >> key >> K) || key != "K") fail("expected 'K <bandwidth>'");
    if (!(in >> key >> policy_name) || key != "policy") fail("expected 'policy <name>'");
    if (!(in >> key) || key != "gamma") fail("expected 'gamma <components>'");
    for (int l = 0; l < d; ++l) {
        double g;
        if (!(in >> g)) fail("missing gamma component");
        gamma.push_back(g);
    }
    TruncationPolicy policy;
    if (policy_name == "periodic_wrap") policy = TruncationPolicy::periodic_wrap;
    else if (policy_name == "diagonal_lump") policy = TruncationPolicy::diagonal_lump;
    else { fail("unknown policy '" + policy_name + "'"); policy = TruncationPolicy::periodic_wrap; }
    const int side = 2 * K + 1;
    std::vector<double> g(static_cast<std::size_t>(side) * (d == 2 ? side : 1), 0.0);
    if (d == 1) {
        for (int i = 0; i < side; ++i) {
            int k;
            double w;
            if (!(in >> k >> w)) fail("short weight table");
            if (k < -K || k > K) fail("offset out of band");
            g[static_cast<std::size_t>(k + K)] = w;
        }
    } else {
        for (int i = 0; i < side * side; ++i) {
            int k0, k1;
            double w;
            if (!(in >> k0 >> k1 >> w)) fail("short weight table");
            g[static_cast<std::size_t>(k0 + K) + static_cast<std::size_t>(k1 + K) * side] = w;
        }
    }
    // Sigma metadata is not part of the dump format; loaded kernels default
    // to the conservative general-measure modulus.
    return WeightKernel(dx, d, K, policy, std::move(gamma), std::move(g), SigmaClass{});
}

WeightKernel load_string(const std::string& text) {
    std::istringstream ss(text);
    return load(ss);
}

}  // namespace levyfv
