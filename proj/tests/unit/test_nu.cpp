#include "hd/errors.hpp"
#include "hd/nu.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <cmath>

using namespace hd;

TEST_CASE("parametric constants")
{
    const NUInstance in = build_instance(Symmetry::Spin, Scheme::ImprovedR2, 2.0, 5.0, 3);
    CHECK(in.c[1] == 1.0);
    CHECK(in.c[2] == 1.0);
    CHECK(in.c[3] == 1.0);
    CHECK(in.c[4] == 1.0);
    CHECK(in.c[5] == 0.0);
    CHECK(in.c[6] == -0.5);
    CHECK(in.xi1 == doctest::Approx(4.0 + 5.0));
    CHECK(in.xi2 == doctest::Approx(8.0 + 5.0 - 12.0));
    CHECK(in.xi3 == doctest::Approx(4.0));
    CHECK(in.c[7] == doctest::Approx(0.25 + in.xi1));
    CHECK(in.c[8] == doctest::Approx(-in.xi2));
    CHECK(in.c[9] == doctest::Approx(in.xi3));
    CHECK(in.c[10] == doctest::Approx(12.25));
    CHECK(in.c[11] == doctest::Approx(4.0));
    CHECK(in.c[12] == doctest::Approx(7.0));
    CHECK(in.c[13] == doctest::Approx(2.0));
    CHECK(in.c[14] == doctest::Approx(4.0));

    const NUInstance ps = build_instance(Symmetry::Pseudospin, Scheme::ImprovedR2, 2.0, 5.0, 3);
    CHECK(ps.xi1 == doctest::Approx(4.0 - 5.0));
    CHECK(ps.xi2 == doctest::Approx(8.0 - 5.0 - 6.0));
    CHECK(ps.c[12] == doctest::Approx(5.0));
    CHECK(ps.c[14] == doctest::Approx(3.0));

    const NUInstance r1 = build_instance(Symmetry::Pseudospin, Scheme::ProperR1, 1.5, -2.0, -2);
    CHECK(r1.xi1 == doctest::Approx(2.25 - 2.0 + 4.0));
    CHECK(r1.xi2 == doctest::Approx(4.5 - 2.0 - 2.0));
    CHECK(r1.xi3 == doctest::Approx(2.25));
}

TEST_CASE("lambda_n")
{
    const NUInstance in = build_instance(Symmetry::Spin, Scheme::ImprovedR2, 0.8, 1.0, 2);
    CHECK(in.lambda_n(0) == 0.0);
    CHECK(in.lambda_n(1) == doctest::Approx(1.0 + 2.0 * (0.8 + 3.0)));
    CHECK(in.lambda() == doctest::Approx(in.xi1 - in.xi3 - 3.0 * (3.0 + 1.6)));
    CHECK_THROWS_AS(eigenvalue_condition(in, -1), DomainError);
    CHECK_THROWS_AS(build_instance(Symmetry::Spin, Scheme::ProperR1, -0.1, 1.0, 1), DomainError);
    CHECK_THROWS_AS(build_instance(Symmetry::Spin, Scheme::ProperR1, 0.1, 1.0, 0), DomainError);
}

namespace {

using hdtest::real;

// alpha and beta^2 of the instance at energy e
std::pair<double, double> nu_parameters(const hdtest::Problem& p, real e)
{
    const real d2 = p.delta * p.delta;
    const real alpha = std::sqrt(p.a0(e) / d2);
    real beta_sq = 0;
    if (p.approx == hdtest::Approx::R2) {
        beta_sq = p.sym == hdtest::Sym::Spin ? (p.mass + e - p.constant) * p.strength / d2
                                            : (p.mass - e + p.constant) * p.strength / d2;
    } else {
        beta_sq = p.sym == hdtest::Sym::Spin ? 2 * (e + p.mass - p.constant) * p.strength / d2
                                            : 2 * (e - p.mass - p.constant) * p.strength / d2;
    }
    return {static_cast<double>(alpha), static_cast<double>(beta_sq)};
}

} // namespace

// The instance carries the kappa > 0 exponent (kappa + 1 spin, kappa pseudospin),
// which is the regular one only for kappa > 0.
TEST_CASE("eigenvalue condition vanishes on genuine roots")
{
    hdtest::Gen gen(2024);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        hdtest::Problem p;
        p.sym = gen.coin() ? hdtest::Sym::Spin : hdtest::Sym::Pseudospin;
        p.approx = gen.coin() ? hdtest::Approx::R2 : hdtest::Approx::R1;
        p.mass = gen.uniform(1.0, 8.0);
        p.delta = gen.uniform(0.02, 0.3);
        p.strength = gen.uniform(-5.0, 5.0);
        p.constant = gen.uniform(-3.0, 3.0);
        p.n = gen.integer(0, 4);
        p.kappa = gen.integer(1, 4);
        p.d0 = 0;
        for (const auto& root : hdtest::quantization_roots(p)) {
            if (!root.genuine)
                continue;
            const auto [alpha, beta_sq] = nu_parameters(p, root.energy);
            const Symmetry sym = p.sym == hdtest::Sym::Spin ? Symmetry::Spin : Symmetry::Pseudospin;
            const Scheme scheme = p.approx == hdtest::Approx::R2 ? Scheme::ImprovedR2 : Scheme::ProperR1;
            const NUInstance in = build_instance(sym, scheme, alpha, beta_sq, p.kappa);
            const double scale = std::max({1.0, std::abs(in.lambda_n(p.n)), std::abs(in.xi1)});
            CAPTURE(i);
            CHECK(std::abs(eigenvalue_condition(in, p.n)) <= 1e-8 * scale);
            ++checked;
        }
    }
    CHECK(checked > 50);
}
