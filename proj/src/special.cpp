#include "zetaxray/special.hpp"

#include <limits>

#include "zetaxray/log_gamma.hpp"
#include "zetaxray/zeta.hpp"

namespace zx {
namespace {

using lcomplex = std::complex<long double>;

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int safety_terms = 5;
constexpr int max_series_terms = 400;

// Sum a power series given term(k); stop after the relative cutoff plus the
// safety margin, or at exactly `fixed_terms` when that is positive.
template <typename TermFn, typename SkipFn>
EvalResult sum_series(TermFn term, SkipFn structural_zero, int fixed_terms) {
    lcomplex sum{0.0L, 0.0L};
    long double magnitude = 0.0L;
    long double last = 0.0L;
    int extra = -1;
    const int limit = fixed_terms > 0 ? fixed_terms : max_series_terms;
    int k = 0;
    for (; k < limit; ++k) {
        const lcomplex t = term(k);
        if (structural_zero(k)) continue;
        sum += t;
        last = std::abs(t);
        magnitude = std::max(magnitude, last);
        if (fixed_terms > 0) continue;
        if (extra < 0) {
            if (last <= 1e-16L * std::abs(sum)) extra = 0;
        } else if (++extra >= safety_terms) {
            ++k;
            break;
        }
    }
    EvalResult r;
    r.value = complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
    r.error_bound = static_cast<double>(last) +
                    8.0 * eps * static_cast<double>(magnitude) + eps * std::abs(r.value);
    r.method = Method::series;
    r.best_effort = (fixed_terms <= 0 && k >= max_series_terms);
    return r;
}

void check_modulus(ComplexPoint z, double limit, const char* name) {
    if (std::hypot(z.re, z.im) > limit) {
        throw RangeError(std::string(name) + ": |z| outside the series domain");
    }
}

EvalResult bessel_impl(ComplexPoint z, int fixed_terms) {
    check_modulus(z, bessel_j7_max_modulus, "bessel_j7");
    const lcomplex half(z.re / 2.0L, z.im / 2.0L);
    const lcomplex half2 = half * half;
    lcomplex lead = 1.0L;
    for (int i = 0; i < 7; ++i) lead *= half;
    lead /= 5040.0L;  // 7!
    // term_k = lead (-1)^k half^{2k} / (k! (k+7)! / 7!)
    lcomplex current = lead;
    auto term = [&](int k) {
        if (k > 0) current *= -half2 / static_cast<long double>(k * (k + 7));
        return current;
    };
    return sum_series(term, [](int) { return false; }, fixed_terms);
}

EvalResult airy_impl(ComplexPoint z, int fixed_terms) {
    check_modulus(z, airy_max_modulus, "airy_ai");
    const long double sqrt3_2 = 0.866025403784438646763723170752936183L;
    const long double prefactor = std::pow(3.0L, -2.0L / 3.0L) / 3.14159265358979323846264338327950288L;
    const lcomplex w = std::pow(3.0L, 1.0L / 3.0L) * lcomplex(z.re, z.im);
    lcomplex w_pow = 1.0L;       // w^k / k!
    auto term = [&](int k) {
        if (k > 0) w_pow *= w / static_cast<long double>(k);
        const int r = k % 3;
        if (r == 2) return lcomplex{0.0L, 0.0L};  // sin(2 pi) = 0
        const double g = std::exp(log_gamma(ComplexPoint((k + 1) / 3.0, 0.0)).value.real());
        const long double s = (r == 0) ? sqrt3_2 : -sqrt3_2;
        return prefactor * static_cast<long double>(g) * s * w_pow;
    };
    return sum_series(term, [](int k) { return k % 3 == 2; }, fixed_terms);
}

}  // namespace

complex hermite7(ComplexPoint z) {
    const complex x = z.value();
    const complex x2 = x * x;
    return x * (-1680.0 + x2 * (3360.0 + x2 * (-1344.0 + 128.0 * x2)));
}

EvalResult bessel_j7(ComplexPoint z) { return bessel_impl(z, 0); }
EvalResult bessel_j7_truncated(ComplexPoint z, int terms) { return bessel_impl(z, terms); }
EvalResult airy_ai(ComplexPoint z) { return airy_impl(z, 0); }
EvalResult airy_ai_truncated(ComplexPoint z, int terms) { return airy_impl(z, terms); }

EvalResult gamma(ComplexPoint z) {
    if (z.im == 0.0 && z.re <= 0.0 && z.re == std::floor(z.re)) {
        throw PoleError("gamma: pole at nonpositive integer");
    }
    EvalResult r;
    if (z.re > 0.0) {
        const EvalResult lg = log_gamma(z);
        r.value = std::exp(lg.value);
        r.error_bound = std::abs(r.value) * (lg.error_bound + eps);
        r.method = Method::series;
        return r;
    }
    const EvalResult lg = log_gamma(ComplexPoint(1.0 - z.re, -z.im));
    const complex denom = sin_pi(z.value()) * std::exp(lg.value);
    r.value = pi / denom;
    r.error_bound = std::abs(r.value) * (lg.error_bound + 4.0 * eps * (1.0 + std::abs(z.value())));
    r.method = Method::reflection;
    return r;
}

}  // namespace zx
