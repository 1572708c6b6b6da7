#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zetaxray/geometry.hpp"
#include "zetaxray/types.hpp"

namespace zx {

/// A complex function the X-ray tracer can sample, with its declared poles.
/// Evaluation is deterministic and safe to call from several threads.
class FunctionOracle {
public:
    enum class Kind { zeta, hermite7, bessel_j7, airy_ai, gamma, user_polynomial };

    static FunctionOracle zeta(double target_accuracy = 1e-12);
    static FunctionOracle hermite7();
    static FunctionOracle bessel_j7();
    static FunctionOracle airy_ai();
    static FunctionOracle gamma();
    /// sum_k coefficients[k] z^k
    static FunctionOracle polynomial(std::vector<complex> coefficients);

    Kind kind() const { return kind_; }
    std::string_view identifier() const;

    /// Throws PoleError at a declared pole and RangeError outside the domain.
    EvalResult evaluate(ComplexPoint z) const;
    complex operator()(complex z) const { return evaluate(ComplexPoint(z)).value; }

    /// Declared poles inside `rect` (closed).
    std::vector<ComplexPoint> poles_in(const Rectangle& rect) const;

    /// True when f(conj z) = conj f(z).
    bool real_on_real_axis() const;

    const std::vector<complex>& coefficients() const { return coefficients_; }

private:
    FunctionOracle(Kind kind, double target) : kind_(kind), target_(target) {}
    EvalResult evaluate_raw(ComplexPoint z) const;

    Kind kind_;
    double target_ = 1e-12;
    std::vector<complex> coefficients_;
};

/// Registry lookup by identifier: zeta, hermite7, bessel_j7, airy_ai, gamma,
/// or "poly:c0,c1,..." with real coefficients in increasing degree.
FunctionOracle make_oracle(std::string_view identifier);

std::vector<std::string> oracle_identifiers();

}  // namespace zx
