#include <doctest.h>

#include <cmath>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include "pubdebt/error.hpp"
#include "pubdebt/special.hpp"

using namespace pubdebt::special;

TEST_CASE("digamma anchors") {
    CHECK(std::abs(digamma(1.0) + kEulerGamma) < 1e-15);
    CHECK(std::abs(digamma(0.5) - (-kEulerGamma - 2.0 * std::log(2.0))) < 1e-14);
    CHECK_THROWS_AS((void)digamma(0.0), pubdebt::Error);
    CHECK_THROWS_AS((void)digamma(-1.5), pubdebt::Error);
}

TEST_CASE("digamma recurrence and agreement with boost") {
    for (double x = 0.01; x < 200.0; x *= 1.07) {
        CHECK(std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-12 * std::max(1.0, 1.0 / x));
        CHECK(std::abs(digamma(x) - boost::math::digamma(x)) < 1e-12 * std::max(1.0, std::abs(digamma(x))));
    }
    // across the switch point of the asymptotic series
    for (double x = 9.9; x < 10.1; x += 0.01) {
        CHECK(std::abs(digamma(x) - boost::math::digamma(x)) < 1e-13);
    }
}

TEST_CASE("trigamma") {
    CHECK(std::abs(trigamma(1.0) - M_PI * M_PI / 6.0) < 1e-14);
    for (double x = 0.05; x < 200.0; x *= 1.1) {
        CHECK(std::abs(trigamma(x) - boost::math::trigamma(x)) < 1e-12 * std::max(1.0, trigamma(x)));
        const double h = 1e-5 * std::max(1.0, x);
        const double fd = (digamma(x + h) - digamma(x - h)) / (2.0 * h);
        CHECK(std::abs(fd - trigamma(x)) < 1e-6 * std::max(1.0, trigamma(x)));
    }
}

TEST_CASE("incomplete gamma") {
    // integer shape: Q(k, x) = e^-x sum_{j<k} x^j / j!
    for (double x : {0.1, 0.6, 2.0, 5.0, 30.0}) {
        CHECK(std::abs(gamma_q(1.0, x) - std::exp(-x)) < 1e-14);
        CHECK(std::abs(gamma_q(2.0, x) - (1.0 + x) * std::exp(-x)) < 1e-14);
        CHECK(std::abs(gamma_q(3.0, x) - (1.0 + x + x * x / 2.0) * std::exp(-x)) < 1e-14);
    }
    for (double a : {0.3, 1.7, 2.0, 9.5, 40.0}) {
        for (double x : {0.0, 0.01, 0.5, 1.0, 3.0, 10.0, 60.0}) {
            CHECK(std::abs(gamma_q(a, x) - boost::math::gamma_q(a, x)) < 1e-13);
            CHECK(std::abs(gamma_p(a, x) + gamma_q(a, x) - 1.0) < 1e-14);
        }
    }
}
