#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "zetaxray/gram.hpp"
#include "zetaxray/zeta.hpp"

namespace zx {
namespace {

constexpr long sieve_limit = 100000;

const std::vector<long>& primes_to(long limit) {
    static const std::vector<long> primes = [] {
        std::vector<bool> composite(sieve_limit + 1, false);
        std::vector<long> out;
        for (long i = 2; i <= sieve_limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (long j = i * i; j <= sieve_limit; j += i) composite[j] = true;
        }
        return out;
    }();
    if (limit > sieve_limit) throw RangeError("prime sieve limited to 1e5");
    return primes;
}

int moebius(int k) {
    int result = 1;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        result = -result;
    }
    return k > 1 ? -result : result;
}

// log of zeta(x) with the Euler factors of p <= sieve_limit removed.
double log_zeta_above(double x) {
    double sum = std::log(zeta(ComplexPoint(x, 0.0), 1e-15).value.real());
    for (long p : primes_to(sieve_limit)) sum += std::log1p(-std::pow(static_cast<double>(p), -x));
    return sum;
}

// sum_{p > sieve_limit} p^{-x} by Moebius inversion of log zeta.
double prime_zeta_above(double x) {
    const double next = static_cast<double>(sieve_limit);
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
        if (std::pow(next, 1.0 - k * x) < 1e-20) break;
        const int mu = moebius(k);
        if (mu != 0) sum += mu / static_cast<double>(k) * log_zeta_above(k * x);
    }
    return sum;
}

}  // namespace

double arcsin_prime_partial_sum(double sigma, long p_max) {
    if (!(sigma > 0.0)) throw DomainError("arcsin sum: requires sigma > 0");
    double sum = 0.0;
    for (long p : primes_to(p_max)) {
        if (p > p_max) break;
        sum += std::asin(std::pow(static_cast<double>(p), -sigma));
    }
    return sum;
}

double van_de_lune_function(double sigma) {
    if (!(sigma > 1.0)) throw DomainError("van de Lune sum diverges for sigma <= 1");
    double sum = arcsin_prime_partial_sum(sigma, sieve_limit);
    // arcsin x = sum_j c_j x^{2j+1}, c_j = (2j)! / (4^j j!^2 (2j+1)).
    double binomial = 1.0;  // (2j)! / (4^j j!^2)
    for (int j = 0; j < 60; ++j) {
        const double c = binomial / (2.0 * j + 1.0);
        const double x = (2.0 * j + 1.0) * sigma;
        if (c * std::pow(static_cast<double>(sieve_limit), 1.0 - x) < 1e-20) break;
        sum += c * prime_zeta_above(x);
        binomial *= (2.0 * j + 1.0) / (2.0 * j + 2.0);
    }
    return sum - pi / 2.0;
}

double van_de_lune_sigma0(int digits) {
    if (digits < 1 || digits > 14) throw RangeError("sigma0: digits must be in 1..14");
    const int bits = std::min(52, static_cast<int>(std::ceil((digits + 1) * std::log2(10.0))));
    boost::math::tools::eps_tolerance<double> tol(bits);
    std::uintmax_t max_iter = 200;
    const auto [lo, hi] =
        boost::math::tools::toms748_solve([](double s) { return van_de_lune_function(s); }, 1.05, 1.5, tol, max_iter);
    return 0.5 * (lo + hi);
}

}  // namespace zx
