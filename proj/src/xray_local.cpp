#include "xray_local.hpp"

#include <cmath>

namespace zx::detail {

std::optional<complex> try_eval(const FunctionOracle& oracle, complex z) {
    try {
        const complex v = oracle.evaluate(ComplexPoint(z)).value;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return std::nullopt;
        return v;
    } catch (const DomainError&) {
        return std::nullopt;
    } catch (const RangeError&) {
        return std::nullopt;
    } catch (const NumericError&) {
        return std::nullopt;
    }
}

Sample sample_point(const FunctionOracle& oracle, ComplexPoint p, double nudge) {
    Sample s;
    bool pole = false;
    try {
        s.value = oracle.evaluate(p).value;
    } catch (const PoleError&) {
        pole = true;
    } catch (const DomainError&) {
        s.invalid = true;
    } catch (const RangeError&) {
        s.invalid = true;
    } catch (const NumericError&) {
        s.invalid = true;
    }
    if (s.invalid) return s;
    if (!pole && s.value.real() != 0.0 && s.value.imag() != 0.0) {
        if (!std::isfinite(s.value.real()) || !std::isfinite(s.value.imag())) s.invalid = true;
        return s;
    }
    s.nudged = true;
    const auto v = try_eval(oracle, p.value() + nudge * complex(0.5, 1.0));
    if (!v || v->real() == 0.0 || v->imag() == 0.0) {
        s.invalid = true;
        return s;
    }
    s.value = *v;
    return s;
}

std::optional<complex> derivative(const FunctionOracle& oracle, complex z, double h) {
    const auto a = try_eval(oracle, z + h);
    const auto b = try_eval(oracle, z - h);
    if (!a || !b) return std::nullopt;
    return (*a - *b) / (2.0 * h);
}

std::optional<CauchyDerivatives> cauchy_derivatives(const FunctionOracle& oracle, complex z, double rho, int nodes) {
    complex s1{0.0, 0.0};
    complex s2{0.0, 0.0};
    for (int k = 0; k < nodes; ++k) {
        const complex w = std::polar(1.0, 2.0 * pi * k / nodes);
        const auto v = try_eval(oracle, z + rho * w);
        if (!v) return std::nullopt;
        s1 += *v / w;
        s2 += *v / (w * w);
    }
    return CauchyDerivatives{s1 / (nodes * rho), 2.0 * s2 / (nodes * rho * rho)};
}

std::optional<Projection> project_onto(const FunctionOracle& oracle, CurveKind kind, ComplexPoint p,
                                       double scale_length, double max_move, int max_iterations) {
    const complex start = p.value();
    complex z = start;
    const auto df = derivative(oracle, z, 1e-5 * scale_length);
    if (!df || std::abs(*df) == 0.0) return std::nullopt;
    const complex grad = component_gradient(*df, kind);
    const double tol = 1e-9 * std::abs(*df) * scale_length;
    for (int it = 0; it <= max_iterations; ++it) {
        const auto v = try_eval(oracle, z);
        if (!v) return std::nullopt;
        const double g = component(*v, kind);
        if (std::abs(g) <= tol) return Projection{ComplexPoint(z), it};
        z -= g * grad / std::norm(grad);
        if (std::abs(z - start) > max_move) return std::nullopt;
    }
    return std::nullopt;
}

std::optional<complex> newton_zero(const FunctionOracle& oracle, complex z0, double scale_length, double max_move) {
    complex z = z0;
    // The difference step follows the Newton step down, so that the slow
    // approach to a multiple zero is not stalled by a step wider than |z - z*|.
    double h = 1e-5 * scale_length;
    for (int it = 0; it < 400; ++it) {
        const auto v = try_eval(oracle, z);
        if (!v) return std::nullopt;
        if (*v == complex(0.0, 0.0)) return z;
        const auto df = derivative(oracle, z, h);
        if (!df || std::abs(*df) == 0.0) return std::nullopt;
        const complex step = *v / *df;
        z -= step;
        if (std::abs(z - z0) > max_move || !std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
        if (std::abs(step) < 1e-13 * std::max(1.0, std::abs(z))) return z;
        h = std::min(h, 1e-3 * std::abs(step));
    }
    return std::nullopt;
}

}  // namespace zx::detail
