#include <cmath>

#include <boost/math/special_functions/airy.hpp>
#include <doctest.h>

#include "oracles.hpp"
#include "zetaxray/oracle.hpp"
#include "zetaxray/special.hpp"
#include "zetaxray/zeta.hpp"

using namespace zx;
using doctest::Approx;

TEST_CASE("Hermite H7 matches the three-term recurrence") {
    for (complex z : {complex(0.0, 0.0), complex(1.3, 0.0), complex(-2.0, 0.7), complex(5.0, -3.0)}) {
        const complex expected = oracle::hermite(7, z);
        CHECK(std::abs(hermite7(ComplexPoint(z)) - expected) < 1e-12 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("Bessel J7 series matches the integral representation") {
    for (complex z : {complex(0.5, 0.0), complex(3.0, 1.0), complex(-7.0, 2.0), complex(10.0, -4.0)}) {
        const complex expected = oracle::bessel_j_integral(7, z);
        const complex got = bessel_j7(ComplexPoint(z)).value;
        CHECK(std::abs(got - expected) < 1e-12 * std::max(1.0, std::abs(expected)));
    }
    // Leading behaviour (z/2)^7 / 7! at small z.
    const double z = 1e-3;
    CHECK(bessel_j7(ComplexPoint(z, 0.0)).value.real() == Approx(std::pow(z / 2, 7) / 5040.0).epsilon(1e-6));
    CHECK_THROWS_AS(bessel_j7(ComplexPoint(61.0, 0.0)), RangeError);
}

TEST_CASE("Bessel truncation converges to the full series") {
    const ComplexPoint z(4.0, 1.0);
    CHECK(std::abs(bessel_j7_truncated(z, 40).value - bessel_j7(z).value) < 1e-14);
    CHECK(std::abs(bessel_j7_truncated(z, 2).value - bessel_j7(z).value) > 1e-6);
}

TEST_CASE("Airy Ai on the real axis against boost") {
    for (double x : {-5.0, -1.0, 0.0, 0.5, 2.0}) {
        const double expected = boost::math::airy_ai(x);
        CHECK(airy_ai(ComplexPoint(x, 0.0)).value.real() == Approx(expected).epsilon(1e-10));
    }
    CHECK(airy_ai(ComplexPoint(0.0, 0.0)).value.real() == Approx(0.355028053887817239).epsilon(1e-14));
}

TEST_CASE("Airy Ai satisfies w'' = z w") {
    const ComplexPoint z(1.2, -0.8);
    const double h = 1e-3;
    const complex w0 = airy_ai(z).value;
    const complex wp = airy_ai(ComplexPoint(z.re + h, z.im)).value;
    const complex wm = airy_ai(ComplexPoint(z.re - h, z.im)).value;
    CHECK(std::abs((wp - 2.0 * w0 + wm) / (h * h) - z.value() * w0) < 1e-5);
}

TEST_CASE("Gamma against the standard library and its poles") {
    for (double x : {0.5, 1.0, 3.5, 10.0, -0.5, -2.5}) {
        CHECK(gamma(ComplexPoint(x, 0.0)).value.real() == Approx(std::tgamma(x)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(gamma(ComplexPoint(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(gamma(ComplexPoint(-4.0, 0.0)), PoleError);
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    const complex z(0.3, 1.7);
    const complex lhs = gamma(ComplexPoint(z)).value * gamma(ComplexPoint(1.0 - z)).value;
    CHECK(std::abs(lhs - pi / std::sin(pi * z)) < 1e-12 * std::abs(lhs));
}

TEST_CASE("sin_pi is exact at integers") {
    for (int k = -6; k <= 6; ++k) CHECK(zx::sin_pi(complex(k, 0.0)) == complex(0.0, 0.0));
    CHECK(zx::sin_pi(complex(0.25, 0.4)).real() == Approx(std::sin(pi * complex(0.25, 0.4)).real()).epsilon(1e-14));
}

TEST_CASE("oracle registry") {
    for (const auto& id : {"zeta", "hermite7", "bessel_j7", "airy_ai", "gamma"}) {
        CHECK(make_oracle(id).identifier() == id);
    }
    const FunctionOracle p = make_oracle("poly:-1,0,1");
    CHECK(p.kind() == FunctionOracle::Kind::user_polynomial);
    CHECK(std::abs(p(complex(2.0, 1.0)) - (complex(2.0, 1.0) * complex(2.0, 1.0) - 1.0)) < 1e-14);
    CHECK(p.real_on_real_axis());
    CHECK_THROWS_AS(make_oracle("nonsense"), DomainError);

    const FunctionOracle z = FunctionOracle::zeta();
    CHECK_THROWS_AS(z.evaluate(ComplexPoint(1.0, 0.0)), PoleError);
    CHECK(z.poles_in(Rectangle(-2, 2, -1, 1)).size() == 1);
    CHECK(z.evaluate(ComplexPoint(-3.5, 0.0)).value.imag() == 0.0);

    const FunctionOracle g = FunctionOracle::gamma();
    CHECK(g.poles_in(Rectangle(-3.5, 1, -1, 1)).size() == 4);
}
