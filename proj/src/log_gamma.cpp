#include "zetaxray/log_gamma.hpp"

#include <algorithm>
#include <limits>

#include "zetaxray/bernoulli.hpp"

namespace zx {
namespace {

constexpr double shift_threshold = 12.0;
constexpr int stirling_terms = 14;

bool is_nonpositive_integer(ComplexPoint s) {
    return s.im == 0.0 && s.re <= 0.0 && s.re == std::floor(s.re);
}

}  // namespace

EvalResult log_gamma_shifted(ComplexPoint s, int min_shift) {
    if (is_nonpositive_integer(s)) {
        throw PoleError("log_gamma: pole at nonpositive integer");
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();

    complex z = s.value();
    complex shift_sum{0.0, 0.0};
    double rounding = 0.0;
    int k = 0;
    while (k < min_shift || z.real() < shift_threshold) {
        const complex l = std::log(z);
        shift_sum += l;
        rounding += std::abs(l);
        z += 1.0;
        ++k;
    }

    // Stirling: (z - 1/2) log z - z + log(2 pi)/2 + sum B_2j / (2j (2j-1) z^{2j-1})
    const complex log_z = std::log(z);
    complex result = (z - 0.5) * log_z - z + 0.5 * std::log(2.0 * pi);
    rounding += std::abs((z - 0.5) * log_z) + std::abs(z);

    const complex inv_z = 1.0 / z;
    const complex inv_z2 = inv_z * inv_z;
    complex power = inv_z;
    double last_term = 0.0;
    for (int j = 1; j <= stirling_terms + 1; ++j) {
        const complex term = bernoulli_even_double(j) / (2.0 * j * (2.0 * j - 1.0)) * power;
        if (j == stirling_terms + 1) {
            last_term = std::abs(term);
            break;
        }
        result += term;
        power *= inv_z2;
    }
    result -= shift_sum;

    return {result, last_term + 4.0 * eps * rounding, Method::series};
}

EvalResult log_gamma(ComplexPoint s) { return log_gamma_shifted(s, 0); }

}  // namespace zx
