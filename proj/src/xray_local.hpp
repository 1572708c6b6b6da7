#pragma once

// Helpers shared by the X-ray sources; not installed.

#include <optional>

#include "zetaxray/oracle.hpp"
#include "zetaxray/xray.hpp"

namespace zx::detail {

inline double component(complex v, CurveKind k) { return k == CurveKind::thick ? v.imag() : v.real(); }
inline double other_component(complex v, CurveKind k) { return k == CurveKind::thick ? v.real() : v.imag(); }

/// Gradient of the vanishing component of `kind` given f'(z), as a complex
/// number (d/dsigma + i d/dt).
inline complex component_gradient(complex df, CurveKind k) {
    return k == CurveKind::thick ? complex(df.imag(), df.real()) : complex(df.real(), -df.imag());
}

/// Unit tangent along which the other component increases.
inline complex component_tangent(complex df, CurveKind k) {
    const complex t = k == CurveKind::thick ? std::conj(df) : complex(df.imag(), df.real());
    const double n = std::abs(t);
    return n > 0.0 ? t / n : complex(0.0, 0.0);
}

struct Sample {
    complex value;
    bool nudged = false;
    bool invalid = false;
};

/// f(p), moved off exact zeros of either component and off poles by a
/// displacement of size `nudge` (up and slightly right).
Sample sample_point(const FunctionOracle& oracle, ComplexPoint p, double nudge);

/// f(z) that reports failure instead of throwing.
std::optional<complex> try_eval(const FunctionOracle& oracle, complex z);

/// Central-difference f'(z) with step h.
std::optional<complex> derivative(const FunctionOracle& oracle, complex z, double h);

/// f'(z) and f''(z) by the trapezoidal rule on a circle of radius rho.
struct CauchyDerivatives {
    complex d1;
    complex d2;
};
std::optional<CauchyDerivatives> cauchy_derivatives(const FunctionOracle& oracle, complex z, double rho,
                                                    int nodes = 16);

/// Newton projection of p onto the level set of `kind`, moving at most
/// max_move. Returns nothing when it fails to converge.
struct Projection {
    ComplexPoint point;
    int iterations = 0;
};
std::optional<Projection> project_onto(const FunctionOracle& oracle, CurveKind kind, ComplexPoint p,
                                       double scale_length, double max_move, int max_iterations = 12);

/// Newton on f from z0; result within max_move of z0 or nothing.
std::optional<complex> newton_zero(const FunctionOracle& oracle, complex z0, double scale_length, double max_move);

}  // namespace zx::detail
