#pragma once

#include "zetaxray/types.hpp"

namespace zx {

/// H_7(z) = 128 z^7 - 1344 z^5 + 3360 z^3 - 1680 z by Horner's rule.
complex hermite7(ComplexPoint z);

inline constexpr double bessel_j7_max_modulus = 60.0;
inline constexpr double airy_max_modulus = 20.0;

/// J_7(z) = (z/2)^7 sum_k (-1)^k (z/2)^{2k} / (k! (k+7)!), |z| <= 60.
/// Summation stops once a term drops below 1e-16 of the partial sum, plus
/// five more terms.
EvalResult bessel_j7(ComplexPoint z);

/// The same series cut after exactly `terms` terms.
EvalResult bessel_j7_truncated(ComplexPoint z, int terms);

/// Ai(z) = 3^{-2/3}/pi sum_k Gamma((k+1)/3) sin(2 pi (k+1)/3) / k! (3^{1/3} z)^k,
/// |z| <= 20. The series cancels badly for large |z| off the positive real
/// direction; error_bound reports the rounding of the largest term.
EvalResult airy_ai(ComplexPoint z);

EvalResult airy_ai_truncated(ComplexPoint z, int terms);

/// Gamma(z): exp(log_gamma) for Re z > 0, reflection
/// Gamma(z) = pi / (sin(pi z) Gamma(1 - z)) otherwise. PoleError at 0, -1, ...
EvalResult gamma(ComplexPoint z);

}  // namespace zx
