#pragma once

#include "zetaxray/types.hpp"

namespace zx {

/// Truncation of the Euler-Maclaurin formula: the direct sum runs to N-1 and
/// M Bernoulli correction terms T_1..T_M are added.
struct EulerMaclaurinParams {
    int n_terms = 10;     // N >= 2
    int corrections = 1;  // M >= 1
};

inline constexpr int em_max_corrections = 30;

/// Riemann-Siegel coefficient of the error term c * t^{-3/4}. Calibrated
/// against Euler-Maclaurin on [50, 1e4]; not a proven constant.
inline constexpr double rs_error_constant = 3.0;

/// Smallest t accepted by riemann_siegel_z.
inline constexpr double rs_min_t = 20.0;

/// sum_{n=1}^{count} n^{-s}. Fixed 2^16-term blocks are summed in parallel
/// and combined in block order, so the result does not depend on the number
/// of threads.
complex dirichlet_partial_sum(complex s, long count);

/// Plain left-to-right loop over the same terms; reference for the kernel.
complex dirichlet_partial_sum_serial(complex s, long count);

/// Parameter policy: N = max(10, ceil(1.3 |t|) + 10), M grown until the
/// remainder bound meets the target (capped at em_max_corrections).
EulerMaclaurinParams em_params(ComplexPoint s, double target_accuracy);

/// The Euler-Maclaurin formula at fixed N, M (no reflection, no policy).
EvalResult zeta_euler_maclaurin_fixed(ComplexPoint s, EulerMaclaurinParams params);

/// zeta(s) by Euler-Maclaurin. For Re s < 0 the formula is applied at 1 - s
/// and mapped back through the functional equation (method = reflection),
/// since the direct formula loses every digit to cancellation there.
EvalResult zeta_euler_maclaurin(ComplexPoint s, double target_accuracy);

/// Truncated Dirichlet series, Re s > 1 only. Tail bounded by an integral.
EvalResult zeta_series(ComplexPoint s, double target_accuracy);

/// The Riemann-Siegel phase Im log Gamma(1/4 + i t/2) - (t/2) log pi, t > 0.
double theta(double t);

/// theta'(t) = Re psi(1/4 + i t/2) / 2 - log(pi) / 2, by the asymptotic
/// expansion (adequate for Newton steps, t >= 1).
double theta_derivative(double t);

/// Pieces of the Riemann-Siegel evaluation of Z(t).
struct RSDecomposition {
    double t = 0.0;
    long m = 0;            // floor(sqrt(t / 2 pi))
    double xi = 0.0;       // sqrt(t / 2 pi) - m, in [0, 1)
    double phi = 0.0;      // xi - xi^2 + 1/16
    double main_sum = 0.0;
    double correction_g = 0.0;
    double theta = 0.0;
};

struct HardyZ {
    EvalResult eval;  // value is real
    RSDecomposition parts;
};

/// h(xi) = cos(2 pi phi) / cos(2 pi xi), with the removable singularities at
/// xi = 1/4 and 3/4 replaced by a local Taylor expansion.
double rs_h(double xi);

/// Z(t) = 2 sum_{n<=m} cos(theta - t log n)/sqrt(n) + g(t), with the single
/// correction term g. Throws RangeError for t < 20.
HardyZ riemann_siegel_z(double t);

/// Z(t) from Euler-Maclaurin: Re(e^{i theta} zeta(1/2 + i t)).
EvalResult hardy_z_euler_maclaurin(double t, double target_accuracy);

/// Z(t) by Riemann-Siegel when its error term meets the target, otherwise by
/// Euler-Maclaurin.
EvalResult hardy_z(double t, double target_accuracy);

/// Z(t) whose sign is trustworthy: Riemann-Siegel unless |Z| is within its
/// error term, then Euler-Maclaurin.
EvalResult hardy_z_signed(double t);

/// zeta(1/2 + i t) = e^{-i theta(t)} Z(t), t > 0.
complex zeta_critical(double t);

/// Method dispatcher. Picks the cheapest of series / Euler-Maclaurin /
/// Riemann-Siegel that meets the target, reflects Re s < 0, and uses
/// conjugate symmetry for Im s < 0. Throws PoleError at s = 1.
EvalResult zeta(ComplexPoint s, double target_accuracy = 1e-12);

/// The factor chi(s) with zeta(s) = chi(s) zeta(1 - s), evaluated in log form
/// so that large |Im s| does not overflow.
complex functional_factor(complex s);

/// sin(pi z) with exact reduction of Re z, so integer arguments give 0.
complex sin_pi(complex z);

}  // namespace zx
