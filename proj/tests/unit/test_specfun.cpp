#include "hd/errors.hpp"
#include "hd/specfun.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <cmath>

using namespace hd;

TEST_CASE("pochhammer")
{
    CHECK(pochhammer(3.7, 0) == 1.0);
    CHECK(pochhammer(1.0, 5) == 120.0);
    CHECK(pochhammer(0.5, 3) == doctest::Approx(1.875));
    for (int k = 0; k < 8; ++k)
        CHECK(pochhammer(-2.3, k) == doctest::Approx(static_cast<double>(hdtest::rising(-2.3L, k))));
}

TEST_CASE("terminating 2F1")
{
    CHECK(hyp2f1_terminating(0, 3.3, 1.7, 0.4) == 1.0);
    CHECK(hyp2f1_terminating(1, 3.3, 1.7, 0.4) == doctest::Approx(1.0 - 3.3 / 1.7 * 0.4));
    // (c)_k vanishing inside the series
    CHECK_THROWS_AS(TerminatingHyp(3, 1.0, -1.0), DomainError);
    CHECK_NOTHROW(TerminatingHyp(2, 1.0, -2.0));

    const TerminatingHyp h(6, 4.25, 2.5);
    for (int k = 0; k <= 6; ++k) {
        const double ref = static_cast<double>(hdtest::rising(-6, k) * hdtest::rising(4.25L, k) /
                                               (hdtest::rising(2.5L, k) * hdtest::rising(1, k)));
        CHECK(h.coefficients()[k] == doctest::Approx(ref).epsilon(1e-14));
    }
    for (double x = -1.0; x <= 1.0; x += 0.125)
        CHECK(h(x) == doctest::Approx(h.horner(x)).epsilon(1e-12).scale(1.0));
}

TEST_CASE("2F1 derivative identity")
{
    for (int n = 1; n <= 6; ++n) {
        const TerminatingHyp h(n, n + 3.4, 2.2);
        for (double x = 0.05; x < 1.0; x += 0.15) {
            const double step = 1e-5;
            const double fd = (h(x + step) - h(x - step)) / (2 * step);
            CAPTURE(n);
            CAPTURE(x);
            CHECK(h.derivative(x) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("jacobi polynomials")
{
    CHECK(jacobi_p(0, 0.3, 1.2, 0.4) == 1.0);
    const double a = 0.7, b = 2.5, x = -0.35;
    CHECK(jacobi_p(1, a, b, x) == doctest::Approx((a + 1) + (a + b + 2) * (x - 1) / 2));
    // Legendre P2
    CHECK(jacobi_p(2, 0.0, 0.0, 0.3) == doctest::Approx(0.5 * (3 * 0.09 - 1)));
}

TEST_CASE("jacobi agrees with the 2F1 form")
{
    // (a+1)_n / n! 2F1(-n, n+a+b+1; a+1; (1-x)/2), summed in extended precision
    for (int n = 0; n <= 10; ++n) {
        for (double a : {0.0, 0.5, 3.0, 7.25}) {
            for (double b : {-0.5, 1.0, 4.5}) {
                for (double x = -1.0; x <= 1.0; x += 0.25) {
                    const hdtest::real s = 0.5L * (1.0L - x);
                    hdtest::real sum = 0, magnitude = 0, power = 1;
                    for (int k = 0; k <= n; ++k) {
                        const hdtest::real term = hdtest::rising(-n, k) * hdtest::rising(n + a + b + 1, k) /
                                                  (hdtest::rising(a + 1, k) * hdtest::rising(1, k)) * power;
                        sum += term;
                        magnitude += std::fabs(term);
                        power *= s;
                    }
                    const hdtest::real pre = hdtest::rising(a + 1, n) / hdtest::rising(1, n);
                    const double ref = static_cast<double>(pre * sum);
                    const double scale = static_cast<double>(pre * magnitude);
                    CAPTURE(n);
                    CAPTURE(x);
                    CHECK(std::abs(jacobi_p(n, a, b, x) - ref) <= 1e-12 * std::max(1.0, scale));
                }
            }
        }
    }
}
