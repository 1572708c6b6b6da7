#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zx {

using complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// A point s = sigma + i t of the complex plane. Both components are finite.
struct ComplexPoint {
    double re = 0.0;
    double im = 0.0;

    constexpr ComplexPoint() = default;
    ComplexPoint(double sigma, double t);
    explicit ComplexPoint(complex z) : ComplexPoint(z.real(), z.imag()) {}

    complex value() const { return {re, im}; }
    ComplexPoint conj() const { return {re, -im}; }

    friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

enum class Method { euler_maclaurin, riemann_siegel, series, reflection };

std::string_view to_string(Method m);

/// Value of an evaluator together with an absolute error estimate. The bound
/// is rigorous for the Euler-Maclaurin remainder and heuristic elsewhere.
struct EvalResult {
    complex value;
    double error_bound = 0.0;
    Method method = Method::series;
    /// The requested accuracy could not be met; error_bound says what was.
    bool best_effort = false;
    /// Within 1e-6 of a pole; the value is dominated by the polar part.
    bool near_pole = false;
};

// Error taxonomy. The CLI maps domain/range failures to exit status 2 and
// numeric non-convergence to exit status 3.

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation requested at a pole of the function.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zx
