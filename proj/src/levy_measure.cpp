#include "levyfv/levy_measure.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "levyfv/errors.hpp"
#include "levyfv/quadrature.hpp"
#include "levyfv/special.hpp"

namespace levyfv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite(double x) { return std::isfinite(x); }

// int_a^b s^q ds with the q = -1 case; a < b, both > 0.
double power_integral(double q, double a, double b) {
    if (std::abs(q + 1.0) < 1e-12) return std::log(b / a);
    return (std::pow(b, q + 1.0) - std::pow(a, q + 1.0)) / (q + 1.0);
}

struct Segment {
    double s0, s1;    // |z| range, s0 < s1
    double r0, r1;    // densities at s0, s1
    bool power;       // log-log interpolation; otherwise linear in s
    double p;         // exponent for the power form r0 (s/s0)^p
};

// |z|^k moment of one tabulated segment over (a,b) intersected with [s0,s1].
double segment_moment(const Segment& seg, int k, double a, double b) {
    const double lo = std::max(a, seg.s0);
    const double hi = std::min(b, seg.s1);
    if (!(hi > lo)) return 0.0;
    if (seg.power) {
        return seg.r0 * std::pow(seg.s0, -seg.p) * power_integral(seg.p + k, lo, hi);
    }
    if (seg.r0 == 0.0 && seg.r1 == 0.0) return 0.0;
    const double slope = (seg.r1 - seg.r0) / (seg.s1 - seg.s0);
    auto f = [&](double s) { return std::pow(s, k) * (seg.r0 + slope * (s - seg.s0)); };
    return quad::gauss_legendre_12(f, lo, hi);
}

}  // namespace

LevyMeasure::LevyMeasure(Variant v, int dimension) : v_(std::move(v)), d_(dimension) {
    if (const auto* a = std::get_if<Atomic>(&v_)) atoms_ = a->atoms;
    check();

    symmetric_ = std::visit(
        [&](const auto& m) -> bool {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                return true;
            } else if constexpr (std::is_same_v<T, Cgmy>) {
                return m.G == m.M;
            } else if constexpr (std::is_same_v<T, Atomic>) {
                std::vector<bool> used(m.atoms.size(), false);
                for (size_t i = 0; i < m.atoms.size(); ++i) {
                    bool found = false;
                    for (size_t j = 0; j < m.atoms.size(); ++j) {
                        if (used[j]) continue;
                        if (m.atoms[j].z == -m.atoms[i].z && m.atoms[j].w == m.atoms[i].w) {
                            used[j] = true;
                            found = true;
                            break;
                        }
                    }
                    if (!found) return false;
                }
                return true;
            } else {
                const auto& t = m;
                const size_t n = t.z.size();
                for (size_t i = 0; i < n; ++i) {
                    const size_t j = n - 1 - i;
                    if (t.z[j] != -t.z[i] || t.rho[j] != t.rho[i]) return false;
                }
                return true;
            }
        },
        v_);
}

LevyMeasure LevyMeasure::power_law(double lambda, double c, int dimension) {
    return LevyMeasure(PowerLaw{lambda, c}, dimension);
}
LevyMeasure LevyMeasure::cgmy(double C, double G, double M, double Y) {
    return LevyMeasure(Cgmy{C, G, M, Y}, 1);
}
LevyMeasure LevyMeasure::atomic(std::vector<Atom> atoms) {
    return LevyMeasure(Atomic{std::move(atoms)}, 1);
}
LevyMeasure LevyMeasure::tabulated(std::vector<double> z, std::vector<double> rho) {
    return LevyMeasure(Tabulated{std::move(z), std::move(rho)}, 1);
}

LevyMeasure LevyMeasure::tabulated_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidMeasure("tabulated measure: cannot open '" + path + "'");
    std::vector<double> z, rho;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double zi, ri;
        if (!(ls >> zi)) continue;  // blank/comment line
        if (!(ls >> ri)) {
            throw InvalidMeasure("tabulated measure: line " + std::to_string(line_no) +
                                 ": expected two columns (z density)");
        }
        z.push_back(zi);
        rho.push_back(ri);
    }
    return tabulated(std::move(z), std::move(rho));
}

void LevyMeasure::check() const {
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                if (!(m.lambda > 0.0 && m.lambda < 2.0))
                    throw InvalidMeasure("power-law order must lie in (0,2)");
                if (!(m.c > 0.0)) throw InvalidMeasure("power-law intensity must be positive");
                if (d_ < 1) throw InvalidMeasure("dimension must be >= 1");
            } else if constexpr (std::is_same_v<T, Cgmy>) {
                if (d_ != 1) throw InvalidMeasure("CGMY supports d = 1 only");
                if (!(m.C > 0.0 && m.G > 0.0 && m.M > 0.0))
                    throw InvalidMeasure("CGMY requires C, G, M > 0");
                if (!(m.Y > 0.0 && m.Y < 2.0)) throw InvalidMeasure("CGMY order Y must lie in (0,2)");
            } else if constexpr (std::is_same_v<T, Atomic>) {
                if (d_ != 1) throw InvalidMeasure("atomic measures support d = 1 only");
                for (const auto& a : m.atoms) {
                    if (a.z == 0.0) throw InvalidMeasure("atom at the origin is not admissible");
                    if (!(a.w >= 0.0) || !finite(a.w) || !finite(a.z))
                        throw InvalidMeasure("atom masses must be finite and nonnegative");
                }
            } else {
                if (d_ != 1) throw InvalidMeasure("tabulated measures support d = 1 only");
                const auto& t = m;
                if (t.z.size() != t.rho.size())
                    throw InvalidMeasure("tabulated measure: column length mismatch");
                if (t.z.empty()) throw InvalidMeasure("tabulated measure: no samples");
                for (size_t i = 0; i < t.z.size(); ++i) {
                    if (t.z[i] == 0.0) throw InvalidMeasure("tabulated measure: z = 0 excluded");
                    if (!(t.rho[i] >= 0.0) || !finite(t.rho[i]) || !finite(t.z[i]))
                        throw InvalidMeasure("tabulated measure: densities must be finite, >= 0");
                    if (i > 0 && !(t.z[i] > t.z[i - 1]))
                        throw InvalidMeasure("tabulated measure: z must be strictly increasing");
                }
            }
        },
        v_);
}

void LevyMeasure::validate() const {
    check();
    // (A.3) numerically: int |z|^2 ^ 1 dmu = second_moment_in(1) + mass(1).
    const TailMoments tm = tail_moments(1.0);
    if (!finite(tm.mass) || !finite(tm.second_moment_in))
        throw DivergentMoment("int |z|^2 ^ 1 dmu does not converge");
}

bool LevyMeasure::integrable_small_jumps() const {
    return std::visit(
        [](const auto& m) -> bool {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PowerLaw>) return m.lambda < 1.0;
            else if constexpr (std::is_same_v<T, Cgmy>) return m.Y < 1.0;
            else return true;
        },
        v_);
}

std::optional<double> LevyMeasure::fractional_order() const {
    if (const auto* p = std::get_if<PowerLaw>(&v_)) return p->lambda;
    if (const auto* c = std::get_if<Cgmy>(&v_)) return c->Y;
    return std::nullopt;
}

double LevyMeasure::density(double z) const {
    const double s = std::abs(z);
    if (s == 0.0) return 0.0;
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                return m.c * std::pow(s, -1.0 - m.lambda);  // d = 1 form
            } else if constexpr (std::is_same_v<T, Cgmy>) {
                const double rate = z > 0.0 ? m.G : m.M;
                return m.C * std::exp(-rate * s) * std::pow(s, -1.0 - m.Y);
            } else if constexpr (std::is_same_v<T, Atomic>) {
                return 0.0;
            } else {
                const auto& t = m;
                if (t.z.size() < 2 || z < t.z.front() || z > t.z.back()) return 0.0;
                auto it = std::upper_bound(t.z.begin(), t.z.end(), z);
                size_t i = static_cast<size_t>(it - t.z.begin());
                i = (i == 0) ? 0 : i - 1;
                if (i + 1 >= t.z.size()) i = t.z.size() - 2;
                const double z0 = t.z[i], z1 = t.z[i + 1];
                if (z0 < 0.0 && z1 > 0.0) return 0.0;  // sign gap carries no mass
                const double r0 = t.rho[i], r1 = t.rho[i + 1];
                const double s0 = std::abs(z0), s1 = std::abs(z1);
                const double a = std::min(s0, s1), b = std::max(s0, s1);
                const double ra = s0 < s1 ? r0 : r1, rb = s0 < s1 ? r1 : r0;
                if (ra > 0.0 && rb > 0.0) {
                    const double p = std::log(rb / ra) / std::log(b / a);
                    return ra * std::pow(s / a, p);
                }
                return ra + (rb - ra) * (s - a) / (b - a);
            }
        },
        v_);
}

double LevyMeasure::radial_density(double s) const {
    const auto* p = std::get_if<PowerLaw>(&v_);
    if (!p) throw OutOfRange("radial density defined for PowerLaw only");
    return p->c * std::pow(s, -static_cast<double>(d_) - p->lambda);
}

namespace {

// Tabulated measures: collect |z|-segments on one side.
std::vector<Segment> side_segments(const Tabulated& t, int side) {
    std::vector<Segment> segs;
    for (size_t i = 0; i + 1 < t.z.size(); ++i) {
        const double z0 = t.z[i], z1 = t.z[i + 1];
        if (z0 < 0.0 && z1 > 0.0) continue;
        if (side > 0 && !(z0 > 0.0)) continue;
        if (side < 0 && !(z1 < 0.0)) continue;
        Segment s;
        if (side > 0) {
            s = {z0, z1, t.rho[i], t.rho[i + 1], false, 0.0};
        } else {
            s = {-z1, -z0, t.rho[i + 1], t.rho[i], false, 0.0};
        }
        if (s.r0 > 0.0 && s.r1 > 0.0) {
            s.power = true;
            s.p = std::log(s.r1 / s.r0) / std::log(s.s1 / s.s0);
        }
        segs.push_back(s);
    }
    return segs;
}

}  // namespace

double LevyMeasure::cont_mass(int side, double a, double b) const {
    if (!(b > a) || a < 0.0) return 0.0;
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                if (d_ != 1) throw OutOfRange("banded queries support d = 1 only");
                const double bl = std::isinf(b) ? 0.0 : std::pow(b, -m.lambda);
                return m.c * (std::pow(a, -m.lambda) - bl) / m.lambda;
            } else if constexpr (std::is_same_v<T, Cgmy>) {
                const double rate = side > 0 ? m.G : m.M;
                const double hi = std::min(b, reach(1e-18));
                if (!(hi > a)) return 0.0;
                auto f = [&](double s) { return m.C * std::exp(-rate * s) * std::pow(s, -1.0 - m.Y); };
                return quad::integrate(f, a, hi, 1e-12, 0.0, 8000);
            } else if constexpr (std::is_same_v<T, Atomic>) {
                return 0.0;
            } else {
                double sum = 0.0;
                for (const auto& seg : side_segments(m, side)) sum += segment_moment(seg, 0, a, b);
                return sum;
            }
        },
        v_);
}

double LevyMeasure::cont_abs_moment(int side, double a, double b) const {
    if (!(b > a) || a < 0.0) return 0.0;
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                if (d_ != 1) throw OutOfRange("banded queries support d = 1 only");
                if (std::isinf(b)) {
                    if (m.lambda <= 1.0)
                        throw DivergentMoment("first tail moment diverges for lambda <= 1");
                    return m.c * std::pow(a, 1.0 - m.lambda) / (m.lambda - 1.0);
                }
                if (std::abs(m.lambda - 1.0) < 1e-13) return m.c * std::log(b / a);
                return m.c * (std::pow(b, 1.0 - m.lambda) - std::pow(a, 1.0 - m.lambda)) /
                       (1.0 - m.lambda);
            } else if constexpr (std::is_same_v<T, Cgmy>) {
                const double rate = side > 0 ? m.G : m.M;
                const double hi = std::min(b, reach(1e-18));
                if (!(hi > a)) return 0.0;
                auto f = [&](double s) { return m.C * std::exp(-rate * s) * std::pow(s, -m.Y); };
                return quad::integrate(f, a, hi, 1e-12, 0.0, 8000);
            } else if constexpr (std::is_same_v<T, Atomic>) {
                return 0.0;
            } else {
                double sum = 0.0;
                for (const auto& seg : side_segments(m, side)) sum += segment_moment(seg, 1, a, b);
                return sum;
            }
        },
        v_);
}

double LevyMeasure::cont_abs2_moment(int side, double a, double b) const {
    if (!(b > a) || a < 0.0) return 0.0;
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                if (d_ != 1) throw OutOfRange("banded queries support d = 1 only");
                if (std::isinf(b)) throw DivergentMoment("second moment diverges at infinity");
                return m.c * (std::pow(b, 2.0 - m.lambda) - std::pow(a, 2.0 - m.lambda)) /
                       (2.0 - m.lambda);
            } else if constexpr (std::is_same_v<T, Cgmy>) {
                const double rate = side > 0 ? m.G : m.M;
                const double hi = std::min(b, reach(1e-18));
                if (!(hi > a)) return 0.0;
                auto f = [&](double s) { return m.C * std::exp(-rate * s) * std::pow(s, 1.0 - m.Y); };
                if (a == 0.0) return quad::integrate_singular_lower(f, 0.0, hi, 1e-12);
                return quad::integrate(f, a, hi, 1e-12, 0.0, 8000);
            } else if constexpr (std::is_same_v<T, Atomic>) {
                return 0.0;
            } else {
                double sum = 0.0;
                for (const auto& seg : side_segments(m, side)) sum += segment_moment(seg, 2, a, b);
                return sum;
            }
        },
        v_);
}

TailMoments LevyMeasure::tail_moments(double r) const {
    if (!(r > 0.0)) throw OutOfRange("tail moments require r > 0");
    TailMoments tm{r, 0.0, 0.0, 0.0};
    if (const auto* p = std::get_if<PowerLaw>(&v_)) {
        // Radial closed forms: surface measure turns |z|^{-d-lambda} into s^{-1-lambda}.
        const double sig = special::unit_sphere_area(d_) * p->c;
        tm.mass = sig * std::pow(r, -p->lambda) / p->lambda;
        if (r < 1.0) {
            tm.first_moment_to_one =
                std::abs(p->lambda - 1.0) < 1e-13
                    ? sig * std::log(1.0 / r)
                    : sig * (1.0 - std::pow(r, 1.0 - p->lambda)) / (1.0 - p->lambda);
        }
        tm.second_moment_in = sig * std::pow(r, 2.0 - p->lambda) / (2.0 - p->lambda);
    } else {
        for (int side : {+1, -1}) {
            tm.mass += cont_mass(side, r, kInf);
            if (r < 1.0) tm.first_moment_to_one += cont_abs_moment(side, r, 1.0);
            tm.second_moment_in += cont_abs2_moment(side, 0.0, r);
        }
        for (const auto& a : atoms_) {
            const double s = std::abs(a.z);
            if (s > r) tm.mass += a.w;
            if (s > r && s <= 1.0) tm.first_moment_to_one += a.w * s;
            if (s <= r) tm.second_moment_in += a.w * s * s;
        }
    }
    if (!finite(tm.mass) || !finite(tm.first_moment_to_one) || !finite(tm.second_moment_in))
        throw DivergentMoment("tail moment quadrature did not converge");
    return tm;
}

std::vector<double> LevyMeasure::gamma_drift(double r) const {
    if (!(r > 0.0)) throw OutOfRange("gamma drift requires r > 0");
    std::vector<double> g(static_cast<size_t>(d_), 0.0);
    if (symmetric_) return g;  // odd integrand: exactly zero, no quadrature
    if (d_ != 1) throw OutOfRange("non-symmetric drift supported in d = 1 only");
    if (r >= 1.0) return g;
    // Strict indicator 1_{|z|<1}: atoms exactly at |z| = 1 are uncompensated.
    double moment = cont_abs_moment(+1, r, 1.0) - cont_abs_moment(-1, r, 1.0);
    for (const auto& a : atoms_) {
        const double s = std::abs(a.z);
        if (s > r && s < 1.0) moment += a.z * a.w;
    }
    g[0] = -moment;
    return g;
}

std::complex<double> LevyMeasure::symbol(double xi) const {
    if (d_ != 1) throw OutOfRange("symbol supported in d = 1 only");
    if (xi == 0.0) return {0.0, 0.0};
    return std::visit(
        [&](const auto& m) -> std::complex<double> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                const double I = special::one_minus_cos_moment(m.lambda);
                return {-2.0 * m.c * I * std::pow(std::abs(xi), m.lambda), 0.0};
            } else if constexpr (std::is_same_v<T, Atomic>) {
                std::complex<double> psi{0.0, 0.0};
                for (const auto& a : m.atoms) {
                    std::complex<double> t{std::cos(xi * a.z) - 1.0, std::sin(xi * a.z)};
                    if (std::abs(a.z) < 1.0) t -= std::complex<double>{0.0, xi * a.z};
                    psi += a.w * t;
                }
                return psi;
            } else {
                const double hi = reach(1e-16);
                double re = 0.0, im = 0.0;
                for (int side : {+1, -1}) {
                    auto rho = [&](double s) { return density(side * s); };
                    auto f_re = [&](double s) { return (std::cos(xi * s) - 1.0) * rho(s); };
                    re += quad::integrate_singular_lower(f_re, 0.0, std::min(1.0, hi), 1e-10, 1e-14);
                    if (hi > 1.0) re += quad::integrate(f_re, 1.0, hi, 1e-10, 1e-14, 20000);
                    if (!symmetric_) {
                        auto f_im_in = [&](double s) {
                            return (std::sin(xi * s) - xi * s) * rho(s);
                        };
                        auto f_im_out = [&](double s) { return std::sin(xi * s) * rho(s); };
                        double part =
                            quad::integrate_singular_lower(f_im_in, 0.0, std::min(1.0, hi), 1e-10, 1e-14);
                        if (hi > 1.0) part += quad::integrate(f_im_out, 1.0, hi, 1e-10, 1e-14, 20000);
                        im += side * part;
                    }
                }
                return {re, im};
            }
        },
        v_);
}

double LevyMeasure::wrapped_density(double w, double period, bool pos_images,
                                    bool neg_images) const {
    const double L = period;
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                const double s = 1.0 + m.lambda;
                double out = 0.0;
                if (pos_images) out += special::hurwitz_zeta(s, 1.0 + w / L);
                if (neg_images) out += special::hurwitz_zeta(s, 1.0 - w / L);
                return m.c * std::pow(L, -s) * out;
            } else if constexpr (std::is_same_v<T, Atomic>) {
                return 0.0;
            } else {
                const double cut = reach(1e-18);
                double out = 0.0;
                for (int mm = 1; mm * L - std::abs(w) <= cut; ++mm) {
                    if (pos_images) out += density(mm * L + w);
                    if (neg_images) out += density(-(mm * L - w));
                    if (mm > 1000000) break;
                }
                return out;
            }
        },
        v_);
}

double LevyMeasure::reach(double tol) const {
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PowerLaw>) {
                const double sig = special::unit_sphere_area(d_) * m.c;
                const double z = std::pow(sig / (m.lambda * tol), 1.0 / m.lambda);
                return std::min(z, 1e300);
            } else if constexpr (std::is_same_v<T, Cgmy>) {
                const double g = std::min(m.G, m.M);
                double z = 1.0;
                for (int it = 0; it < 50; ++it) {
                    const double zn =
                        (std::log(m.C / (g * tol)) - (1.0 + m.Y) * std::log(std::max(z, 1.0))) / g;
                    if (!(zn > 0.0)) return std::max(z, 1.0);
                    if (std::abs(zn - z) < 1e-6 * z) return std::max(zn, 1.0);
                    z = zn;
                }
                return std::max(z, 1.0);
            } else if constexpr (std::is_same_v<T, Atomic>) {
                double r = 0.0;
                for (const auto& a : m.atoms) r = std::max(r, std::abs(a.z));
                return r;
            } else {
                double r = 0.0;
                for (double zi : m.z) r = std::max(r, std::abs(zi));
                return r;
            }
        },
        v_);
}

}  // namespace levyfv
