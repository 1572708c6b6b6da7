#include "zetaxray/zeta.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include <omp.h>

#include "zetaxray/bernoulli.hpp"
#include "zetaxray/log_gamma.hpp"

namespace zx {
namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr long block_size = 1L << 16;
constexpr double log_pi = 1.1447298858494002;
constexpr double two_pi = 2.0 * pi;

inline complex power_term(double sigma, double t, double log_n) {
    const double mag = std::exp(-sigma * log_n);
    const double arg = t * log_n;
    return {mag * std::cos(arg), -mag * std::sin(arg)};
}

complex block_sum(double sigma, double t, long first, long last) {
    complex acc{0.0, 0.0};
    for (long n = first; n <= last; ++n) {
        acc += power_term(sigma, t, std::log(static_cast<double>(n)));
    }
    return acc;
}

// Upper bound on sum_{n=1}^{count} n^{-sigma} used for the rounding estimate.
double magnitude_sum(double sigma, long count) {
    if (count <= 0) return 0.0;
    const double n = static_cast<double>(count);
    // 1 + integral_1^n x^{-sigma} dx, written with expm1 so that sigma near 1 is stable.
    const double u = (1.0 - sigma) * std::log(n);
    if (u == 0.0) return 1.0 + std::log(n);
    return 1.0 + std::log(n) * std::expm1(u) / u;
}

double sec_cos_h(double xi) {
    const double phi = xi - xi * xi + 1.0 / 16.0;
    return std::cos(two_pi * phi) / std::cos(two_pi * xi);
}

complex reflect(ComplexPoint s, const EvalResult& at_reflected, EvalResult& out) {
    const complex chi = functional_factor(s.value());
    out.value = chi * at_reflected.value;
    out.error_bound = std::abs(chi) * at_reflected.error_bound +
                      8.0 * eps * std::abs(out.value) * (1.0 + std::abs(s.value()));
    out.method = Method::reflection;
    out.best_effort = at_reflected.best_effort;
    return out.value;
}

}  // namespace

complex sin_pi(complex z) {
    // Reduce the real part modulo 2 exactly; fmod is exact in binary floating point.
    double x = std::fmod(z.real(), 2.0);
    if (x > 1.0) x -= 2.0;
    if (x < -1.0) x += 2.0;
    const double y = z.imag();
    double s = 0.0;
    double c = 0.0;
    if (x == 0.0 || x == 1.0 || x == -1.0) {
        s = 0.0;
        c = (x == 0.0) ? 1.0 : -1.0;
    } else if (x == 0.5) {
        s = 1.0;
        c = 0.0;
    } else if (x == -0.5) {
        s = -1.0;
        c = 0.0;
    } else {
        s = std::sin(pi * x);
        c = std::cos(pi * x);
    }
    const double py = pi * y;
    return {s * std::cosh(py), c * std::sinh(py)};
}

complex functional_factor(complex s) {
    // chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s). Assembled in log form;
    // sin(pi s / 2) is split into its exponential growth and a bounded part.
    const complex half = 0.5 * s;
    const double y = half.imag();
    complex log_sin;
    if (std::abs(y) < 20.0) {
        const complex sv = sin_pi(half);
        if (sv == complex{0.0, 0.0}) return {0.0, 0.0};
        log_sin = std::log(sv);
    } else {
        // sin(pi w) = e^{pi |y|} * (bounded factor); keep the growth in the exponent.
        double x = std::fmod(half.real(), 2.0);
        const complex w{x, y};
        const complex iw{-pi * w.imag(), pi * w.real()};  // i pi w
        if (y > 0) {
            // sin(pi w) = (e^{-i pi w} / (2i)) (e^{2 i pi w} - 1) * (-1)
            log_sin = -iw - std::log(complex{0.0, 2.0}) + std::log(1.0 - std::exp(2.0 * iw)) +
                      complex{0.0, pi};
        } else {
            log_sin = iw - std::log(complex{0.0, 2.0}) + std::log(1.0 - std::exp(-2.0 * iw));
        }
    }
    const complex log_chi = s * std::log(2.0) + (s - 1.0) * log_pi + log_sin +
                            log_gamma(ComplexPoint(1.0 - s)).value;
    return std::exp(log_chi);
}

complex dirichlet_partial_sum(complex s, long count) {
    if (count <= 0) return {0.0, 0.0};
    const long blocks = (count + block_size - 1) / block_size;
    if (blocks == 1) return block_sum(s.real(), s.imag(), 1, count);
    std::vector<complex> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static) if (!omp_in_parallel())
    for (long b = 0; b < blocks; ++b) {
        const long first = b * block_size + 1;
        const long last = std::min(count, first + block_size - 1);
        partial[static_cast<std::size_t>(b)] = block_sum(s.real(), s.imag(), first, last);
    }
    complex acc{0.0, 0.0};
    for (const complex& p : partial) acc += p;
    return acc;
}

complex dirichlet_partial_sum_serial(complex s, long count) {
    complex acc{0.0, 0.0};
    for (long n = 1; n <= count; ++n) {
        acc += std::pow(static_cast<double>(n), -s);
    }
    return acc;
}

EulerMaclaurinParams em_params(ComplexPoint s, double target_accuracy) {
    EulerMaclaurinParams p;
    p.n_terms = std::max(10, static_cast<int>(std::ceil(1.3 * std::abs(s.im))) + 10);
    // T_{k+1} / T_k = B_{2k+2}/B_{2k} (s+2k-1)(s+2k) / ((2k+1)(2k+2) N^2).
    const complex sv = s.value();
    const double n = p.n_terms;
    complex a = sv * std::pow(n, -sv - 1.0) / 2.0;  // A_1 = s N^{-s-1} / 2!
    for (int m = 1; m <= em_max_corrections; ++m) {
        p.corrections = m;
        const int k = m + 1;  // first omitted term
        a *= (sv + (2.0 * k - 3.0)) * (sv + (2.0 * k - 2.0)) /
             ((2.0 * k - 1.0) * (2.0 * k) * n * n);
        const double denom = s.re + 2.0 * k - 1.0;
        if (denom <= 0.0) continue;
        const double bound = std::abs(bernoulli_even_double(k) * a) *
                             std::abs(sv + (2.0 * k - 1.0)) / denom;
        if (bound <= target_accuracy) break;
    }
    return p;
}

EvalResult zeta_euler_maclaurin_fixed(ComplexPoint s, EulerMaclaurinParams params) {
    if (s.re == 1.0 && s.im == 0.0) throw PoleError("zeta: pole at s = 1");
    if (params.n_terms < 2 || params.corrections < 1 ||
        params.corrections + 1 > max_bernoulli_index) {
        throw RangeError("zeta_euler_maclaurin: invalid N or M");
    }
    const complex sv = s.value();
    const long big_n = params.n_terms;
    const double n = static_cast<double>(big_n);
    const double log_n = std::log(n);

    const complex direct = dirichlet_partial_sum(sv, big_n - 1);
    const complex n_pow = power_term(s.re, s.im, log_n);  // N^{-s}
    const complex tail = 0.5 * n_pow + n * n_pow / (sv - 1.0);

    complex corrections{0.0, 0.0};
    double correction_mag = 0.0;
    complex a = sv * n_pow / (2.0 * n);  // s N^{-s-1} / 2!
    for (int k = 1; k <= params.corrections; ++k) {
        if (k > 1) {
            a *= (sv + (2.0 * k - 3.0)) * (sv + (2.0 * k - 2.0)) /
                 ((2.0 * k - 1.0) * (2.0 * k) * n * n);
        }
        const complex term = bernoulli_even_double(k) * a;
        corrections += term;
        correction_mag += std::abs(term);
    }
    // Remainder: first omitted term times |s + 2M + 1| / (Re s + 2M + 1).
    const int k = params.corrections + 1;
    a *= (sv + (2.0 * k - 3.0)) * (sv + (2.0 * k - 2.0)) /
         ((2.0 * k - 1.0) * (2.0 * k) * n * n);
    const double denom = s.re + 2.0 * k - 1.0;
    const double omitted = std::abs(bernoulli_even_double(k) * a);
    const double remainder = denom > 0.0
                                 ? omitted * std::abs(sv + (2.0 * k - 1.0)) / denom
                                 : std::numeric_limits<double>::infinity();

    const double mags = magnitude_sum(s.re, big_n - 1) + std::abs(tail) + correction_mag;
    const double phase_noise = eps * std::abs(s.im) * log_n * magnitude_sum(s.re, big_n - 1);
    EvalResult r;
    r.value = direct + tail + corrections;
    r.error_bound = remainder + 4.0 * eps * mags + phase_noise;
    r.method = Method::euler_maclaurin;
    r.near_pole = std::abs(sv - 1.0) < 1e-6;
    return r;
}

EvalResult zeta_euler_maclaurin(ComplexPoint s, double target_accuracy) {
    if (s.re == 1.0 && s.im == 0.0) throw PoleError("zeta: pole at s = 1");
    if (!(target_accuracy > 0.0)) throw DomainError("zeta: target accuracy must be positive");
    if (s.re < 0.0) {
        const ComplexPoint reflected(1.0 - s.re, -s.im);
        const complex chi = functional_factor(s.value());
        const double scale = std::max(std::abs(chi), 1e-300);
        EvalResult inner = zeta_euler_maclaurin(reflected, target_accuracy / std::max(scale, 1.0));
        EvalResult out;
        reflect(s, inner, out);
        out.best_effort = out.error_bound > target_accuracy;
        return out;
    }
    EvalResult r = zeta_euler_maclaurin_fixed(s, em_params(s, target_accuracy));
    r.best_effort = r.error_bound > target_accuracy;
    return r;
}

EvalResult zeta_series(ComplexPoint s, double target_accuracy) {
    if (s.re <= 1.0) throw DomainError("zeta_series: requires Re s > 1");
    if (!(target_accuracy > 0.0)) throw DomainError("zeta: target accuracy must be positive");
    // sum_{n>N} n^{-sigma} <= N^{1-sigma} / (sigma - 1).
    const double sigma = s.re;
    const double needed = std::pow(target_accuracy * (sigma - 1.0), 1.0 / (1.0 - sigma));
    const long count = static_cast<long>(std::min(std::ceil(needed), 4.0e9)) + 1;
    EvalResult r;
    r.value = dirichlet_partial_sum(s.value(), count);
    const double tail = std::pow(static_cast<double>(count), 1.0 - sigma) / (sigma - 1.0);
    r.error_bound = tail + 4.0 * eps * magnitude_sum(sigma, count) *
                               (1.0 + std::abs(s.im) * std::log(static_cast<double>(count)));
    r.method = Method::series;
    r.best_effort = r.error_bound > target_accuracy;
    return r;
}

double theta(double t) {
    if (!(t > 0.0)) throw DomainError("theta: requires t > 0");
    const EvalResult lg = log_gamma(ComplexPoint(0.25, 0.5 * t));
    return lg.value.imag() - 0.5 * t * log_pi;
}

double theta_derivative(double t) {
    // theta'(t) ~ log(t / 2 pi) / 2 - 1 / (48 t^2) - 7 / (1920 t^4)
    const double t2 = t * t;
    return 0.5 * std::log(t / two_pi) - 1.0 / (48.0 * t2) - 7.0 / (1920.0 * t2 * t2);
}

double rs_h(double xi) {
    // Near xi0 = 1/4 and 3/4 numerator and denominator vanish together;
    // h = 1/2 -+ u + pi^2 u^2 / 4 -+ pi^2 u^3 / 6 with u = xi - xi0.
    constexpr double window = 1e-3;
    constexpr double c2 = pi * pi / 4.0;
    constexpr double c3 = pi * pi / 6.0;
    if (std::abs(xi - 0.25) < window) {
        const double u = xi - 0.25;
        return 0.5 + u * (-1.0 + u * (c2 - c3 * u));
    }
    if (std::abs(xi - 0.75) < window) {
        const double u = xi - 0.75;
        return 0.5 + u * (1.0 + u * (c2 + c3 * u));
    }
    return sec_cos_h(xi);
}

HardyZ riemann_siegel_z(double t) {
    if (!(t >= rs_min_t)) {
        throw RangeError("riemann_siegel_z: t < 20, use the dispatcher (Euler-Maclaurin)");
    }
    HardyZ out;
    RSDecomposition& d = out.parts;
    const double a = std::sqrt(t / two_pi);
    d.t = t;
    d.m = static_cast<long>(std::floor(a));
    d.xi = a - static_cast<double>(d.m);
    d.phi = d.xi - d.xi * d.xi + 1.0 / 16.0;
    d.theta = theta(t);

    double sum = 0.0;
    for (long n = 1; n <= d.m; ++n) {
        const double nn = static_cast<double>(n);
        sum += std::cos(d.theta - t * std::log(nn)) / std::sqrt(nn);
    }
    d.main_sum = 2.0 * sum;
    const double sign = (d.m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m-1}
    d.correction_g = sign * rs_h(d.xi) / std::sqrt(a);

    const double rounding = eps * (std::abs(d.theta) + t * std::log(std::max(a, 1.0))) * 4.0 *
                            std::sqrt(a);
    out.eval.value = {d.main_sum + d.correction_g, 0.0};
    out.eval.error_bound = rs_error_constant * std::pow(t, -0.75) + rounding;
    out.eval.method = Method::riemann_siegel;
    return out;
}

EvalResult hardy_z_euler_maclaurin(double t, double target_accuracy) {
    const EvalResult z = zeta_euler_maclaurin(ComplexPoint(0.5, t), target_accuracy);
    const double th = theta(t);
    const complex rotated = std::polar(1.0, th) * z.value;
    EvalResult r = z;
    r.value = {rotated.real(), 0.0};
    r.error_bound = z.error_bound + eps * std::abs(th) * std::abs(z.value);
    return r;
}

EvalResult hardy_z(double t, double target_accuracy) {
    if (t >= rs_min_t) {
        const HardyZ rs = riemann_siegel_z(t);
        if (rs.eval.error_bound <= target_accuracy) return rs.eval;
    }
    return hardy_z_euler_maclaurin(t, target_accuracy);
}

EvalResult hardy_z_signed(double t) {
    if (t >= rs_min_t) {
        const HardyZ rs = riemann_siegel_z(t);
        if (std::abs(rs.eval.value.real()) > rs.eval.error_bound) return rs.eval;
    }
    return hardy_z_euler_maclaurin(t, 1e-10);
}

complex zeta_critical(double t) {
    if (!(t > 0.0)) throw DomainError("zeta_critical: requires t > 0");
    const double z = (t >= rs_min_t) ? riemann_siegel_z(t).eval.value.real()
                                     : hardy_z_euler_maclaurin(t, 1e-12).value.real();
    return std::polar(z, -theta(t));
}

EvalResult zeta(ComplexPoint s, double target_accuracy) {
    if (s.re == 1.0 && s.im == 0.0) throw PoleError("zeta: pole at s = 1");
    if (!(target_accuracy > 0.0)) throw DomainError("zeta: target accuracy must be positive");
    if (s.im < 0.0) {
        EvalResult r = zeta(s.conj(), target_accuracy);
        r.value = std::conj(r.value);
        return r;
    }
    if (s.re < 0.0) {
        const complex chi = functional_factor(s.value());
        const double scale = std::max(std::abs(chi), 1.0);
        const EvalResult inner = zeta(ComplexPoint(1.0 - s.re, -s.im), target_accuracy / scale);
        EvalResult out;
        reflect(s, inner, out);
        out.best_effort = out.error_bound > target_accuracy;
        return out;
    }
    if (s.re == 0.5 && s.im >= rs_min_t) {
        const HardyZ rs = riemann_siegel_z(s.im);
        if (rs.eval.error_bound <= target_accuracy) {
            EvalResult r = rs.eval;
            r.value = std::polar(rs.eval.value.real(), -rs.parts.theta);
            return r;
        }
    }
    const long em_cost = std::max(10L, static_cast<long>(std::ceil(1.3 * s.im)) + 10);
    if (s.re > 1.0) {
        const double needed = std::pow(target_accuracy * (s.re - 1.0), 1.0 / (1.0 - s.re));
        if (needed < static_cast<double>(em_cost)) return zeta_series(s, target_accuracy);
    }
    return zeta_euler_maclaurin(s, target_accuracy);
}

}  // namespace zx
