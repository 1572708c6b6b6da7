#include "zetaxray/oracle.hpp"

#include <charconv>
#include <cmath>

#include "zetaxray/special.hpp"
#include "zetaxray/zeta.hpp"

namespace zx {

Rectangle::Rectangle(double s0, double s1, double t0, double t1)
    : sigma_min(s0), sigma_max(s1), t_min(t0), t_max(t1) {
    if (!(s0 < s1) || !(t0 < t1)) {
        throw DomainError("Rectangle: requires sigma_min < sigma_max and t_min < t_max");
    }
}

FunctionOracle FunctionOracle::zeta(double target_accuracy) {
    return FunctionOracle(Kind::zeta, target_accuracy);
}
FunctionOracle FunctionOracle::hermite7() { return FunctionOracle(Kind::hermite7, 0.0); }
FunctionOracle FunctionOracle::bessel_j7() { return FunctionOracle(Kind::bessel_j7, 0.0); }
FunctionOracle FunctionOracle::airy_ai() { return FunctionOracle(Kind::airy_ai, 0.0); }
FunctionOracle FunctionOracle::gamma() { return FunctionOracle(Kind::gamma, 0.0); }

FunctionOracle FunctionOracle::polynomial(std::vector<complex> coefficients) {
    if (coefficients.empty()) throw DomainError("polynomial oracle: no coefficients");
    FunctionOracle o(Kind::user_polynomial, 0.0);
    o.coefficients_ = std::move(coefficients);
    return o;
}

std::string_view FunctionOracle::identifier() const {
    switch (kind_) {
        case Kind::zeta: return "zeta";
        case Kind::hermite7: return "hermite7";
        case Kind::bessel_j7: return "bessel_j7";
        case Kind::airy_ai: return "airy_ai";
        case Kind::gamma: return "gamma";
        case Kind::user_polynomial: return "poly";
    }
    return "unknown";
}

EvalResult FunctionOracle::evaluate(ComplexPoint z) const {
    EvalResult r = evaluate_raw(z);
    // Rounding in log-form evaluations can leave a stray imaginary part on
    // the real axis, which would scatter the sign field there.
    if (z.im == 0.0 && real_on_real_axis()) r.value = complex(r.value.real(), 0.0);
    return r;
}

EvalResult FunctionOracle::evaluate_raw(ComplexPoint z) const {
    switch (kind_) {
        case Kind::zeta: return zx::zeta(z, target_);
        case Kind::hermite7: {
            EvalResult r;
            r.value = zx::hermite7(z);
            r.error_bound = 1e-15 * (1.0 + std::pow(std::abs(z.value()), 7) * 128.0);
            r.method = Method::series;
            return r;
        }
        case Kind::bessel_j7: return zx::bessel_j7(z);
        case Kind::airy_ai: return zx::airy_ai(z);
        case Kind::gamma: return zx::gamma(z);
        case Kind::user_polynomial: {
            const complex x = z.value();
            complex acc{0.0, 0.0};
            double mag = 0.0;
            for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
                acc = acc * x + *it;
                mag = mag * std::abs(x) + std::abs(*it);
            }
            EvalResult r;
            r.value = acc;
            r.error_bound = 4e-16 * mag;
            r.method = Method::series;
            return r;
        }
    }
    throw DomainError("unknown oracle");
}

std::vector<ComplexPoint> FunctionOracle::poles_in(const Rectangle& rect) const {
    std::vector<ComplexPoint> poles;
    if (kind_ == Kind::zeta) {
        if (rect.contains(ComplexPoint(1.0, 0.0))) poles.emplace_back(1.0, 0.0);
    } else if (kind_ == Kind::gamma) {
        if (rect.t_min <= 0.0 && rect.t_max >= 0.0) {
            const double hi = std::min(0.0, std::floor(rect.sigma_max));
            for (double n = hi; n >= rect.sigma_min; n -= 1.0) poles.emplace_back(n, 0.0);
        }
    }
    return poles;
}

bool FunctionOracle::real_on_real_axis() const {
    if (kind_ != Kind::user_polynomial) return true;
    for (const complex& c : coefficients_) {
        if (c.imag() != 0.0) return false;
    }
    return true;
}

FunctionOracle make_oracle(std::string_view identifier) {
    if (identifier == "zeta") return FunctionOracle::zeta();
    if (identifier == "hermite7") return FunctionOracle::hermite7();
    if (identifier == "bessel_j7") return FunctionOracle::bessel_j7();
    if (identifier == "airy_ai") return FunctionOracle::airy_ai();
    if (identifier == "gamma") return FunctionOracle::gamma();
    constexpr std::string_view prefix = "poly:";
    if (identifier.starts_with(prefix)) {
        std::vector<complex> coefficients;
        std::string_view rest = identifier.substr(prefix.size());
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string token(rest.substr(0, comma));
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size() || token.empty()) {
                throw DomainError("poly oracle: bad coefficient '" + token + "'");
            }
            coefficients.emplace_back(v, 0.0);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return FunctionOracle::polynomial(std::move(coefficients));
    }
    throw DomainError("unknown function '" + std::string(identifier) + "'");
}

std::vector<std::string> oracle_identifiers() {
    return {"zeta", "hermite7", "bessel_j7", "airy_ai", "gamma", "poly:c0,c1,..."};
}

}  // namespace zx
