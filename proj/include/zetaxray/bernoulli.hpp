#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zx {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int max_bernoulli_index = 60;

/// Exact B_{2k} for 1 <= k <= 60. Throws RangeError outside the table.
const Rational& bernoulli_even(int k);

/// B_{2k} rounded to double.
double bernoulli_even_double(int k);

}  // namespace zx
