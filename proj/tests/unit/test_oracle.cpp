#include "hd/approx.hpp"
#include "hd/errors.hpp"
#include "hd/oracle.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace hd;

namespace {

ModelParams params(Symmetry sym, double delta, double strength, double constant)
{
    ModelParams p;
    p.symmetry = sym;
    p.screening = delta;
    p.strength = strength;
    p.symmetry_constant = constant;
    return p;
}

double shoot_near(const ModelParams& p, const QuantumState& s, OdeMode mode, double e, double half_width = 0.05,
                  const ShootOptions& options = {})
{
    const OdeSpec spec = build_ode(p, s, mode);
    return shoot_eigenvalue(spec, s.n, e - half_width, e + half_width, options).energy;
}

} // namespace

TEST_CASE("scheme ODEs match the reference coefficients")
{
    hdtest::Gen gen(31);
    for (int i = 0; i < 300; ++i) {
        const Symmetry sym = gen.coin() ? Symmetry::Spin : Symmetry::Pseudospin;
        const bool r2 = gen.coin();
        const ModelParams p = params(sym, gen.uniform(0.02, 0.3), gen.uniform(-5.0, 5.0), gen.uniform(-4.0, 4.0));
        const QuantumState s{gen.integer(0, 3), gen.kappa(5)};
        const double d0 = r2 ? gen.uniform(0.0, 0.2) : 0.0;
        const OdeSpec spec = build_ode(p, s, r2 ? OdeMode::SchemeR2 : OdeMode::SchemeR1, d0);

        hdtest::Problem ref;
        ref.sym = sym == Symmetry::Spin ? hdtest::Sym::Spin : hdtest::Sym::Pseudospin;
        ref.approx = r2 ? hdtest::Approx::R2 : hdtest::Approx::R1;
        ref.mass = p.mass;
        ref.delta = p.screening;
        ref.strength = p.strength;
        ref.constant = p.symmetry_constant;
        ref.d0 = d0;
        ref.kappa = s.kappa;

        const double r = gen.uniform(0.05, 40.0);
        const double e = gen.uniform(-6.0, 6.0);
        const hdtest::real h = 1 / std::expm1(static_cast<hdtest::real>(p.screening * r));
        const double expected = static_cast<double>(ref.a0(e) + ref.a1(e) * h + ref.a2() * h * h);
        const double got = spec.q(r, e);
        CAPTURE(i);
        CHECK(got == doctest::Approx(expected).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("exact and r^-2 equations converge as delta shrinks")
{
    const QuantumState s{0, 3};
    double prev = 1e9;
    for (double d : {0.2, 0.1, 0.05, 0.025, 0.0125}) {
        const ModelParams p = params(Symmetry::Spin, d, 3.4, 0.0);
        const double diff = std::abs(build_ode(p, s, OdeMode::ExactCentrifugal).orbital(1.0) -
                                     build_ode(p, s, OdeMode::SchemeR2).orbital(1.0));
        CHECK(diff < prev);
        prev = diff;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("orbital terms at kappa = 1 pseudospin")
{
    const ModelParams p = params(Symmetry::Pseudospin, 0.1, -3.4, 0.0);
    const QuantumState s{0, 1};
    for (double r : {0.5, 2.0, 10.0}) {
        CHECK(build_ode(p, s, OdeMode::ExactCentrifugal).orbital(r) == 0.0);
        CHECK(build_ode(p, s, OdeMode::SchemeR2).orbital(r) == 0.0);
        CHECK(build_ode(p, s, OdeMode::SchemeR1).orbital(r) ==
              doctest::Approx(-0.1 * hulthen_w(r, 0.1)).epsilon(1e-13));
    }
    CHECK(build_ode(p, s, OdeMode::SchemeR1).small_r_power() == 0.0);
}

TEST_CASE("pseudospin table states with positive strength are not eigenvalues")
{
    const ModelParams p = params(Symmetry::Pseudospin, 0.025, 3.4, -4.9);
    const QuantumState s{0, 2};
    const double e = solve_energy(p, s, SchemeConfig::improved()).rule_energy();
    CHECK_THROWS_AS(shoot_near(p, s, OdeMode::SchemeR2, e), NoEigenvalue);
}

TEST_CASE("shooting reproduces genuine closed-form energies")
{
    struct Case {
        ModelParams p;
        QuantumState s;
        SchemeConfig scheme;
    };
    const Case cases[] = {
        {params(Symmetry::Spin, 0.1, 3.4, 4.9), {0, 1}, SchemeConfig::improved()},
        {params(Symmetry::Spin, 0.1, 3.4, 0.0), {1, 2}, SchemeConfig::improved()},
        {params(Symmetry::Spin, 0.025, 3.4, 4.9), {0, 1}, SchemeConfig::proper_r1()},
        {params(Symmetry::Spin, 0.1, 3.4, 0.0), {2, 2}, SchemeConfig::proper_r1()},
        {params(Symmetry::Pseudospin, 0.1, -3.4, 0.0), {1, 2}, SchemeConfig::improved()},
        {params(Symmetry::Pseudospin, 0.1, -1.0, 2.0), {0, 2}, SchemeConfig::proper_r1()},
    };
    for (const auto& c : cases) {
        const EnergySolution sol = solve_energy(c.p, c.s, c.scheme);
        REQUIRE(sol.genuine(sol.rule));
        const double e = sol.rule_energy();
        const double shot = shoot_near(c.p, c.s, c.scheme.is_r2() ? OdeMode::SchemeR2 : OdeMode::SchemeR1, e);
        CAPTURE(e);
        CHECK(std::abs(shot - e) < 1e-6);
    }
    CHECK(solve_energy(params(Symmetry::Spin, 0.025, 3.4, 4.9), {0, 1}, SchemeConfig::proper_r1()).rule_energy() ==
          doctest::Approx(-0.0995915).epsilon(1e-6));
}

TEST_CASE("exact centrifugal discrepancy shrinks with delta")
{
    const QuantumState s{0, 4};
    double prev = 1e9;
    for (double d : {0.25, 0.1, 0.025}) {
        const ModelParams p = params(Symmetry::Spin, d, 3.4, 0.0);
        const double e = solve_energy(p, s, SchemeConfig::improved()).rule_energy();
        const double exact = shoot_near(p, s, OdeMode::ExactCentrifugal, e, std::max(0.25, 0.5 * std::abs(e)));
        const double diff = std::abs(exact - e);
        CAPTURE(d);
        CHECK(diff < prev);
        prev = diff;
    }
}

TEST_CASE("node ordering and step refinement")
{
    const ModelParams p = params(Symmetry::Spin, 0.1, 3.4, 0.0);
    const OdeSpec spec = build_ode(p, {0, 2}, OdeMode::SchemeR2);
    double prev = -1e9;
    for (int n = 0; n <= 2; ++n) {
        const double e = solve_energy(p, {n, 2}, SchemeConfig::improved()).rule_energy();
        const ShootResult r = shoot_eigenvalue(spec, n, e - 0.05, e + 0.05);
        CHECK(r.node_count == n);
        CHECK(r.energy > prev);
        CHECK(r.defect_monotone);
        prev = r.energy;
    }

    const double e = solve_energy(p, {1, 2}, SchemeConfig::improved()).rule_energy();
    ShootOptions coarse;
    coarse.step = 0.01;
    ShootOptions fine = coarse;
    fine.step = 0.005;
    const double a = shoot_eigenvalue(spec, 1, e - 0.05, e + 0.05, coarse).energy;
    const double b = shoot_eigenvalue(spec, 1, e - 0.05, e + 0.05, fine).energy;
    CHECK(std::abs(a - b) < 1e-8);

    CHECK_THROWS_AS(shoot_eigenvalue(spec, 0, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(shoot_eigenvalue(spec, -1, -5.0, -4.0), DomainError);
}

TEST_CASE("node counting")
{
    CHECK(node_count(std::vector<double>{}) == 0);
    CHECK(node_count(std::vector<double>{1.0, -1.0, 1.0}) == 2);
    CHECK(node_count(std::vector<double>{1.0, 0.0, 1.0}) == 0);
    CHECK(node_count(std::vector<double>{1.0, 0.0, -1.0}) == 1);
    CHECK(node_count(std::vector<double>{1.0, -1e-14, 1.0}) == 0);
    CHECK(node_count(std::vector<double>{0.0, 0.0}) == 0);
}

TEST_CASE("nonrelativistic shooting matches the r^-1 closed form")
{
    for (int l : {0, 1, 2}) {
        for (int n : {0, 1}) {
            const double e = energy_nonrel(n, l, 1.0, 1.0, 0.1, NonrelVariant::ProperR1);
            const OdeSpec spec = build_nonrel_ode(l, 1.0, 1.0, 0.1, NonrelVariant::ProperR1);
            ShootOptions options;
            options.step = 0.005;
            const ShootResult r = shoot_eigenvalue(spec, n, e - 0.5, e + 0.5, options);
            CAPTURE(l);
            CAPTURE(n);
            CHECK(std::abs(r.energy - e) < 1e-6);
        }
    }
    CHECK_THROWS_AS(build_nonrel_ode(-1, 1.0, 1.0, 0.1, NonrelVariant::ProperR1), DomainError);
}
