#include "hd/approx.hpp"

#include "hd/errors.hpp"

#include <cmath>

namespace hd {

namespace {

void require_positive(double r, double delta)
{
    if (!(r > 0.0))
        throw DomainError("radius must be positive");
    if (!(delta > 0.0))
        throw DomainError("screening parameter must be positive");
}

} // namespace

double centrifugal_factor(int kappa, OrbitalSign sign)
{
    const double k = kappa;
    return sign == OrbitalSign::Upper ? k * (k + 1.0) : k * (k - 1.0);
}

double inv_expm1(double x) { return 1.0 / std::expm1(x); }

double hulthen_w(double r, double delta)
{
    require_positive(r, delta);
    return delta * inv_expm1(delta * r);
}

double hulthen_w_prime(double r, double delta)
{
    const double w = hulthen_w(r, delta);
    return -(w * w + delta * w);
}

double improved_inv_r2(double r, double delta, double d0)
{
    require_positive(r, delta);
    const double g = inv_expm1(delta * r);
    return delta * delta * (d0 + g + g * g);
}

double proper_orbital_term(double r, double delta, int kappa, OrbitalSign sign)
{
    const double w = hulthen_w(r, delta);
    const double wp = -(w * w + delta * w);
    const double k = kappa;
    return sign == OrbitalSign::Upper ? k * k * w * w - k * wp : k * k * w * w + k * wp;
}

double orbital_term(double r, double delta, int kappa, OrbitalSign sign, const SchemeConfig& scheme)
{
    if (scheme.scheme == Scheme::ProperR1)
        return proper_orbital_term(r, delta, kappa, sign);
    return centrifugal_factor(kappa, sign) * improved_inv_r2(r, delta, scheme.shift());
}

ApproxProfile error_profile(Comparator comparator, double d0, double delta, int kappa,
                            OrbitalSign sign, std::span<const double> grid)
{
    if (grid.empty())
        throw DomainError("error_profile needs a non-empty grid");
    ApproxProfile out{comparator, {}};
    out.rows.reserve(grid.size());
    const double factor = centrifugal_factor(kappa, sign);
    double previous = 0.0;
    for (double r : grid) {
        if (!(r > previous))
            throw DomainError("error_profile grid must be positive and strictly increasing");
        previous = r;
        double approx = 0.0;
        switch (comparator) {
        case Comparator::ImprovedR2: approx = factor * improved_inv_r2(r, delta, d0); break;
        case Comparator::ConventionalR2: approx = factor * improved_inv_r2(r, delta, 0.0); break;
        case Comparator::ProperR1: approx = proper_orbital_term(r, delta, kappa, sign); break;
        case Comparator::HulthenSquare: {
            const double w = hulthen_w(r, delta);
            approx = factor * w * w;
            break;
        }
        }
        const double exact = factor / (r * r);
        out.rows.push_back({r, exact, approx, std::abs(exact - approx)});
    }
    return out;
}

ApproxProfile error_profile(const SchemeConfig& scheme, double delta, int kappa, OrbitalSign sign,
                            std::span<const double> grid)
{
    Comparator c = Comparator::ImprovedR2;
    if (scheme.scheme == Scheme::ConventionalR2)
        c = Comparator::ConventionalR2;
    else if (scheme.scheme == Scheme::ProperR1)
        c = Comparator::ProperR1;
    return error_profile(c, scheme.shift(), delta, kappa, sign, grid);
}

} // namespace hd
