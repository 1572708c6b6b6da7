#include "zetaxray/bernoulli.hpp"

#include <array>
#include <string>
#include <vector>

#include "zetaxray/types.hpp"

namespace zx {
namespace {

struct BernoulliTable {
    std::array<Rational, max_bernoulli_index + 1> exact;
    std::array<double, max_bernoulli_index + 1> approx{};

    // Akiyama-Tanigawa: a_j <- j (a_{j-1} - a_j) yields B_n in a_0 after
    // round n (with the B_1 = +1/2 convention, irrelevant for even indices).
    BernoulliTable() {
        constexpr int n_max = 2 * max_bernoulli_index;
        std::vector<Rational> a(n_max + 1);
        for (int m = 0; m <= n_max; ++m) {
            a[m] = Rational(1, m + 1);
            for (int j = m; j >= 1; --j) {
                a[j - 1] = j * (a[j - 1] - a[j]);
            }
            if (m % 2 == 0 && m > 0) {
                exact[m / 2] = a[0];
                approx[m / 2] = static_cast<double>(a[0]);
            }
        }
        exact[0] = 1;
        approx[0] = 1.0;
    }
};

const BernoulliTable& table() {
    static const BernoulliTable t;
    return t;
}

void check_index(int k) {
    if (k < 1 || k > max_bernoulli_index) {
        throw RangeError("bernoulli_even: index " + std::to_string(k) +
                         " outside [1, " + std::to_string(max_bernoulli_index) + "]");
    }
}

}  // namespace

const Rational& bernoulli_even(int k) {
    check_index(k);
    return table().exact[k];
}

double bernoulli_even_double(int k) {
    check_index(k);
    return table().approx[k];
}

}  // namespace zx
