#include "pubdebt/special.hpp"

#include <cmath>
#include <limits>

#include "pubdebt/error.hpp"

namespace pubdebt::special {

namespace {

constexpr double kAsymptoticFrom = 10.0;

// Series P(a, x), valid for x < a + 1.
double lower_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 1000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) (modified Lentz), valid for x >= a + 1.
double upper_continued_fraction(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

void check_domain(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "incomplete gamma needs a > 0 and x >= 0");
    }
}

}  // namespace

double digamma(double x) {
    if (!(x > 0.0)) throw Error(ErrorKind::InvalidParameter, "digamma defined here for x > 0 only");
    double shift = 0.0;
    while (x < kAsymptoticFrom) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    // -sum B_2n / (2n x^2n), n = 1..7
    const double series =
        inv2 * (-1.0 / 12 +
        inv2 * (1.0 / 120 +
        inv2 * (-1.0 / 252 +
        inv2 * (1.0 / 240 +
        inv2 * (-1.0 / 132 +
        inv2 * (691.0 / 32760 +
        inv2 * (-1.0 / 12)))))));
    return shift + std::log(x) - 0.5 / x + series;
}

double trigamma(double x) {
    if (!(x > 0.0)) throw Error(ErrorKind::InvalidParameter, "trigamma defined here for x > 0 only");
    double shift = 0.0;
    while (x < kAsymptoticFrom) {
        shift += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // sum B_2n / x^(2n+1), n = 1..7
    const double series =
        inv * inv2 * (1.0 / 6 +
        inv2 * (-1.0 / 30 +
        inv2 * (1.0 / 42 +
        inv2 * (-1.0 / 30 +
        inv2 * (5.0 / 66 +
        inv2 * (-691.0 / 2730 +
        inv2 * (7.0 / 6)))))));
    return shift + inv + 0.5 * inv2 + series;
}

double gamma_q(double a, double x) {
    check_domain(a, x);
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - lower_series(a, x);
    return upper_continued_fraction(a, x);
}

double gamma_p(double a, double x) {
    check_domain(a, x);
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return lower_series(a, x);
    return 1.0 - upper_continued_fraction(a, x);
}

}  // namespace pubdebt::special
