#include "hd/approx.hpp"
#include "hd/errors.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace hd;

TEST_CASE("hulthen W")
{
    CHECK(hulthen_w(std::log(2.0), 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    // delta / (e - 1)
    CHECK(hulthen_w(10.0, 0.1) == doctest::Approx(0.05819767068693265).epsilon(1e-14));
    for (double r : {1e-3, 1e-6, 1e-9})
        CHECK(hulthen_w(r, 0.1) * r == doctest::Approx(1.0).epsilon(0.1 * r));
    CHECK_THROWS_AS(hulthen_w(0.0, 0.1), DomainError);
    CHECK_THROWS_AS(hulthen_w(-1.0, 0.1), DomainError);
}

TEST_CASE("stable 1/(e^x - 1) matches its series at small argument")
{
    for (double x : {1e-9, 1e-7, 1e-5, 1e-3, 1e-2, 0.1}) {
        const double ref = static_cast<double>(hdtest::inv_expm1_series(x));
        CAPTURE(x);
        CHECK(std::abs(inv_expm1(x) - ref) <= 1e-15 * std::abs(ref));
    }
}

TEST_CASE("W' against finite differences")
{
    const double delta = 0.17;
    for (double r = 0.2; r < 40.0; r *= 1.7) {
        const double h = 1e-4 * r;
        const double fd = (hulthen_w(r + h, delta) - hulthen_w(r - h, delta)) / (2 * h);
        CAPTURE(r);
        CHECK(hulthen_w_prime(r, delta) == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("improved r^-2 substitute")
{
    // d0 = 0 reproduces delta^2 e^{delta r} / (e^{delta r} - 1)^2
    for (double r : {0.1, 1.0, 7.0, 30.0}) {
        const double d = 0.25;
        const double x = std::exp(d * r);
        CHECK(improved_inv_r2(r, d, 0.0) == doctest::Approx(d * d * x / ((x - 1) * (x - 1))).epsilon(1e-13));
    }
    const double delta = 0.1;
    const double bound = std::pow(delta, 4) / 240.0 * 1.01;
    CHECK(std::abs(improved_inv_r2(1.0, delta, 1.0 / 12.0) - 1.0) <= bound);
    CHECK_THROWS_AS(improved_inv_r2(0.0, 0.1, 1.0 / 12.0), DomainError);
}

TEST_CASE("the shift is additive")
{
    hdtest::Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        const double r = gen.uniform(0.01, 50.0);
        const double d = gen.uniform(0.01, 0.5);
        const double d0 = gen.uniform(-1.0, 1.0);
        const double diff = improved_inv_r2(r, d, d0) - improved_inv_r2(r, d, 0.0);
        const double scale = std::max(1.0, improved_inv_r2(r, d, 0.0));
        CHECK(std::abs(diff - d * d * d0) <= 1e-15 * scale);
    }
}

TEST_CASE("convergence orders under delta halving")
{
    auto err2 = [](double d) { return std::abs(improved_inv_r2(1.0, d, 1.0 / 12.0) - 1.0); };
    const double ratio2 = err2(0.2) / err2(0.1);
    CHECK(ratio2 == doctest::Approx(16.0).epsilon(0.05));

    for (OrbitalSign sign : {OrbitalSign::Upper, OrbitalSign::Lower}) {
        const int kappa = 2;
        const double exact = centrifugal_factor(kappa, sign);
        auto err1 = [&](double d) { return std::abs(proper_orbital_term(1.0, d, kappa, sign) - exact); };
        CHECK(err1(0.02) / err1(0.01) == doctest::Approx(2.0).epsilon(0.02));
    }
}

TEST_CASE("proper r^-1 substitute")
{
    for (double r : {0.5, 3.0, 20.0}) {
        CHECK(proper_orbital_term(r, 0.1, 0, OrbitalSign::Upper) == 0.0);
        CHECK(proper_orbital_term(r, 0.1, 0, OrbitalSign::Lower) == 0.0);
    }
    // kappa^2 W^2 -/+ kappa W' = kappa(kappa +/- 1) W^2 +/- kappa delta W
    for (int k : {-3, -1, 1, 2, 5}) {
        for (double r = 0.05; r < 60.0; r *= 1.9) {
            const double d = 0.13;
            const double w = hulthen_w(r, d);
            const double up = k * (k + 1.0) * w * w + k * d * w;
            const double lo = k * (k - 1.0) * w * w - k * d * w;
            CHECK(proper_orbital_term(r, d, k, OrbitalSign::Upper) ==
                  doctest::Approx(up).epsilon(1e-13).scale(1e-12 * w * w));
            CHECK(proper_orbital_term(r, d, k, OrbitalSign::Lower) ==
                  doctest::Approx(lo).epsilon(1e-13).scale(1e-12 * w * w));
        }
    }
    // ratio to the exact term tends to 1
    for (OrbitalSign sign : {OrbitalSign::Upper, OrbitalSign::Lower}) {
        const double exact = centrifugal_factor(3, sign);
        double prev = 1.0;
        for (double d : {0.1, 1e-2, 1e-3, 1e-4, 1e-5}) {
            const double dev = std::abs(proper_orbital_term(1.0, d, 3, sign) / exact - 1.0);
            CHECK(dev < prev);
            prev = dev;
        }
        CHECK(prev < 1e-4);
    }
    CHECK_THROWS_AS(proper_orbital_term(0.0, 0.1, 1, OrbitalSign::Upper), DomainError);
}

TEST_CASE("error profiles")
{
    const std::vector<double> grid = {0.5, 1.0, 2.0, 4.0};
    const auto improved = error_profile(SchemeConfig::improved(), 0.1, 2, OrbitalSign::Upper, grid);
    const auto conventional = error_profile(SchemeConfig::conventional(), 0.1, 2, OrbitalSign::Upper, grid);
    REQUIRE(improved.rows.size() == grid.size());
    CHECK(improved.rows[1].r == 1.0);
    CHECK(improved.rows[1].abs_error < conventional.rows[1].abs_error);
    for (const auto& row : improved.rows)
        CHECK(row.exact == doctest::Approx(6.0 / (row.r * row.r)));

    const std::vector<double> one = {1.0};
    CHECK(error_profile(Comparator::HulthenSquare, 0.0, 0.1, 1, OrbitalSign::Lower, one).rows.size() == 1);

    double prev = 1.0;
    for (double d : {0.1, 0.01, 0.001}) {
        const double e = error_profile(SchemeConfig::proper_r1(), d, 1, OrbitalSign::Upper, one).rows[0].abs_error;
        CHECK(e < prev);
        prev = e;
    }

    const std::vector<double> empty;
    CHECK_THROWS_AS(error_profile(SchemeConfig::improved(), 0.1, 1, OrbitalSign::Upper, empty), DomainError);
    const std::vector<double> unordered = {1.0, 0.5};
    CHECK_THROWS_AS(error_profile(SchemeConfig::improved(), 0.1, 1, OrbitalSign::Upper, unordered), DomainError);
}
