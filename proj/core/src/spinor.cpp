#include "hd/spinor.hpp"

#include "hd/approx.hpp"
#include "hd/errors.hpp"
#include "hd/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hd {

namespace {

constexpr double quantization_rel_tol = 1e-6;
constexpr double denominator_floor = 1e-12;

void require_symmetry(const ModelParams& p, Symmetry s)
{
    if (p.symmetry != s)
        throw DomainError("component requested for " + to_string(s) + " symmetry but parameters are " +
                          to_string(p.symmetry));
}

struct Sampled {
    std::vector<double> value;
    std::vector<double> derivative;
};

Sampled sample(const ClosedComponent& c, const RadialGrid& grid)
{
    const TerminatingHyp hyp(c.n, c.n + 2.0 * (c.a + c.gamma), 1.0 + 2.0 * c.a);
    Sampled out;
    out.value.resize(grid.size());
    out.derivative.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid.r[i];
        const double x = std::exp(-c.delta * r);
        const double envelope = std::exp(-c.a * c.delta * r) * std::pow(-std::expm1(-c.delta * r), c.gamma);
        const double f = hyp(x);
        out.value[i] = envelope * f;
        out.derivative[i] = out.value[i] * c.delta * (-c.a + c.gamma * inv_expm1(c.delta * r)) -
                            envelope * hyp.derivative(x) * c.delta * x;
    }
    return out;
}

// 1/r for the r^-2 schemes, W(r) for the proper r^-1 scheme.
double spin_orbit_factor(double r, double delta, const SchemeConfig& scheme)
{
    return scheme.scheme == Scheme::ProperR1 ? hulthen_w(r, delta) : 1.0 / r;
}

double companion_denominator(const ModelParams& p, double e)
{
    const double d = p.symmetry == Symmetry::Spin ? p.mass + e - p.symmetry_constant
                                                  : p.mass - e + p.symmetry_constant;
    if (std::abs(d) < denominator_floor)
        throw DomainError("companion component diverges: denominator " + std::to_string(d) + " vanishes");
    return d;
}

std::vector<double> companion(const ModelParams& p, const QuantumState& s, double e, const RadialGrid& grid,
                              const Sampled& primary, const SchemeConfig& scheme)
{
    const double d = companion_denominator(p, e);
    const double k = s.kappa;
    const double sign = p.symmetry == Symmetry::Spin ? 1.0 : -1.0;
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = spin_orbit_factor(grid.r[i], p.screening, scheme);
        out[i] = (primary.derivative[i] + sign * k * t * primary.value[i]) / d;
    }
    return out;
}

} // namespace

RadialGrid RadialGrid::uniform(double r_min, double r_max, std::size_t points)
{
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw DomainError("radial grid needs 0 < r_min < r_max");
    if (points < 3)
        throw DomainError("radial grid needs at least 3 points");
    RadialGrid g;
    g.h = (r_max - r_min) / static_cast<double>(points - 1);
    g.r.resize(points);
    for (std::size_t i = 0; i < points; ++i)
        g.r[i] = r_min + g.h * static_cast<double>(i);
    g.r.back() = r_max;
    return g;
}

RadialGrid RadialGrid::for_state(double delta, double decay_rate, std::size_t points)
{
    if (!(delta > 0.0) || !(decay_rate > 0.0))
        throw DomainError("grid selection needs positive delta and decay rate");
    const double r_min = std::max(1e-4 / delta, 1e-3);
    const double r_max = std::max(28.0 / delta, 40.0 / decay_rate);
    return uniform(r_min, r_max, points);
}

double ClosedComponent::value(double r) const
{
    RadialGrid g;
    g.r = {r};
    return sample(*this, g).value[0];
}

double ClosedComponent::derivative(double r) const
{
    RadialGrid g;
    g.r = {r};
    return sample(*this, g).derivative[0];
}

ClosedComponent closed_component(const ModelParams& p, const QuantumState& s, double e, const SchemeConfig& scheme)
{
    p.validate();
    validate(s);
    const double delta = p.screening;
    const double d2 = delta * delta;
    const double gamma = derive_orbital(s, p.symmetry) + 1.0;
    const bool spin = p.symmetry == Symmetry::Spin;
    double a = 0.0;
    double a_nu = 0.0;

    if (scheme.is_r2()) {
        const double d0 = scheme.shift();
        const double rad = spin ? radicand_spin_r2(p, s.kappa, e, d0) : radicand_pseudospin_r2(p, s.kappa, e, d0);
        if (!(rad > 0.0))
            throw NotBoundState("bound-state radicand is not positive at E = " + std::to_string(e));
        a = std::sqrt(rad) / delta;
        const double N = 2.0 * (s.n + gamma);
        if (spin)
            a_nu = (p.mass + e - p.symmetry_constant) * p.strength / d2 / N - N / 4.0;
        else
            a_nu = -((p.mass - e + p.symmetry_constant) * p.strength / d2 / N + N / 4.0);
    } else {
        const double meff = spin ? p.mass - p.symmetry_constant : p.mass + p.symmetry_constant;
        if (!(std::abs(e) < meff))
            throw NotBoundState("proper r^-1 bound states need |E| < effective mass");
        a = std::sqrt(meff * meff - e * e) / delta;
        const double beta2 = (spin ? 2.0 * (e + meff) : 2.0 * (e - meff)) * p.strength / d2;
        const double N = s.n + gamma;
        a_nu = (beta2 + static_cast<double>(s.kappa) * s.kappa) / (2.0 * N) - N / 2.0;
    }
    if (!(a_nu > 0.0) || std::abs(a - a_nu) > quantization_rel_tol * std::max(1.0, a))
        throw NotBoundState("E = " + std::to_string(e) +
                            " is not an eigenvalue of the regular problem (decay parameter " + std::to_string(a) +
                            " vs quantization " + std::to_string(a_nu) + ")");
    return {s.n, a, gamma, delta};
}

std::vector<double> lower_pseudospin_r2(const ModelParams& p, const QuantumState& s, double e,
                                        const RadialGrid& grid, double d0)
{
    require_symmetry(p, Symmetry::Pseudospin);
    return sample(closed_component(p, s, e, SchemeConfig::improved(d0)), grid).value;
}

std::vector<double> upper_from_lower_pseudospin_r2(const ModelParams& p, const QuantumState& s, double e,
                                                   const RadialGrid& grid, double d0)
{
    require_symmetry(p, Symmetry::Pseudospin);
    const auto scheme = SchemeConfig::improved(d0);
    return companion(p, s, e, grid, sample(closed_component(p, s, e, scheme), grid), scheme);
}

std::vector<double> upper_spin_r2(const ModelParams& p, const QuantumState& s, double e, const RadialGrid& grid,
                                  double d0)
{
    require_symmetry(p, Symmetry::Spin);
    return sample(closed_component(p, s, e, SchemeConfig::improved(d0)), grid).value;
}

std::vector<double> lower_spin_r2(const ModelParams& p, const QuantumState& s, double e, const RadialGrid& grid,
                                  double d0)
{
    require_symmetry(p, Symmetry::Spin);
    const auto scheme = SchemeConfig::improved(d0);
    return companion(p, s, e, grid, sample(closed_component(p, s, e, scheme), grid), scheme);
}

std::pair<std::vector<double>, std::vector<double>> spinor_r1(const ModelParams& p, const QuantumState& s,
                                                              double e, const RadialGrid& grid)
{
    const auto scheme = SchemeConfig::proper_r1();
    const Sampled primary = sample(closed_component(p, s, e, scheme), grid);
    auto other = companion(p, s, e, grid, primary, scheme);
    if (p.symmetry == Symmetry::Spin)
        return {primary.value, std::move(other)};
    return {std::move(other), primary.value};
}

std::vector<double> nonrel_radial(int n, int l, double m, double v0, double delta, NonrelVariant variant,
                                  const RadialGrid& grid)
{
    const double a = nonrel_decay_parameter(n, l, m, v0, delta, variant);
    const double e = energy_nonrel(n, l, m, v0, delta, variant);
    const double limit = variant == NonrelVariant::ImprovedD0 ? l * (l + 1.0) * delta * delta / (24.0 * m) : 0.0;
    if (!(a > 0.0) || !(e < limit))
        throw NotBoundState("no nonrelativistic bound state for n=" + std::to_string(n) + ", l=" + std::to_string(l));
    auto values = sample(ClosedComponent{n, a, l + 1.0, delta}, grid).value;
    if (variant != NonrelVariant::ProperR1)
        for (std::size_t i = 0; i < values.size(); ++i)
            values[i] /= grid.r[i];
    return values;
}

SpinorSolution make_spinor(const ModelParams& p, const QuantumState& s, double e, const SchemeConfig& scheme,
                           const RadialGrid& grid)
{
    const Sampled primary = sample(closed_component(p, s, e, scheme), grid);
    SpinorSolution sol;
    sol.grid = grid;
    sol.energy = e;
    sol.quantum = s;
    sol.scheme = scheme;
    sol.symmetry = p.symmetry;
    auto other = companion(p, s, e, grid, primary, scheme);
    if (p.symmetry == Symmetry::Spin) {
        sol.F = primary.value;
        sol.G = std::move(other);
    } else {
        sol.G = primary.value;
        sol.F = std::move(other);
    }
    return sol;
}

double simpson(std::span<const double> f, double h)
{
    const std::size_t k = f.size();
    if (k < 2)
        return 0.0;
    if (k == 2)
        return 0.5 * h * (f[0] + f[1]);
    const std::size_t last = (k - 1) % 2 == 0 ? k - 1 : k - 2;
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i < last; ++i)
        (i % 2 ? odd : even) += f[i];
    double sum = h / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[last]);
    if (last != k - 1)
        sum += 0.5 * h * (f[k - 2] + f[k - 1]);
    return sum;
}

double norm_integral(const SpinorSolution& sol)
{
    std::vector<double> rho(sol.F.size());
    for (std::size_t i = 0; i < rho.size(); ++i)
        rho[i] = sol.F[i] * sol.F[i] + sol.G[i] * sol.G[i];
    return simpson(rho, sol.grid.h);
}

SpinorSolution normalize(const SpinorSolution& sol)
{
    if (sol.F.size() != sol.grid.size() || sol.G.size() != sol.grid.size())
        throw DomainError("spinor components do not match the grid");
    const double integral = norm_integral(sol);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw DomainError("spinor is not normalizable on this grid");
    const double c = 1.0 / std::sqrt(integral);
    SpinorSolution out = sol;
    for (auto& v : out.F)
        v *= c;
    for (auto& v : out.G)
        v *= c;
    out.norm_constant = sol.norm_constant * c;
    return out;
}

SpinorSolution build_spinor(const ModelParams& p, const QuantumState& s, double e, const SchemeConfig& scheme,
                            const SpinorOptions& options)
{
    const ClosedComponent comp = closed_component(p, s, e, scheme);
    const double rate = comp.a * comp.delta;
    std::size_t points = std::max<std::size_t>(options.initial_points | 1u, 65);
    SpinorSolution sol = make_spinor(p, s, e, scheme, RadialGrid::for_state(p.screening, rate, points));
    double previous = norm_integral(sol);
    while (points < options.max_points) {
        points = 2 * points - 1;
        SpinorSolution finer = make_spinor(p, s, e, scheme, RadialGrid::for_state(p.screening, rate, points));
        const double integral = norm_integral(finer);
        sol = std::move(finer);
        const bool stable = std::abs(integral - previous) <= options.norm_tol * integral;
        previous = integral;
        if (stable)
            break;
    }
    return normalize(sol);
}

namespace {

ResidualReport summarize(std::vector<double> residual, double scale)
{
    ResidualReport rep;
    if (!(scale > 0.0)) {
        rep.degenerate = true;
        rep.values.assign(residual.size(), 0.0);
        return rep;
    }
    double sum = 0.0;
    for (auto& v : residual) {
        v /= scale;
        rep.max = std::max(rep.max, std::abs(v));
        sum += v * v;
    }
    rep.rms = residual.empty() ? 0.0 : std::sqrt(sum / static_cast<double>(residual.size()));
    rep.values = std::move(residual);
    return rep;
}

} // namespace

ResidualReport ode_residual(std::span<const double> u, const RadialGrid& grid, const OdeSpec& spec, double e)
{
    if (u.size() != grid.size())
        throw DomainError("component does not match the grid");
    if (grid.size() < 34)
        throw DomainError("grid too coarse for a residual check (need 32 interior points)");
    const double h = grid.h;
    std::vector<double> res(grid.size() - 2);
    double scale = 0.0;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double d2 = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
        const double qu = spec.q(grid.r[i], e) * u[i];
        res[i - 1] = d2 - qu;
        scale = std::max({scale, std::abs(d2), std::abs(qu)});
    }
    return summarize(std::move(res), scale);
}

ResidualReport ode_residual(const SpinorSolution& sol, const ModelParams& p, const SchemeConfig& scheme)
{
    ModelParams q = p;
    q.symmetry = sol.symmetry;
    const OdeMode mode = scheme.scheme == Scheme::ProperR1 ? OdeMode::SchemeR1 : OdeMode::SchemeR2;
    const OdeSpec spec = build_ode(q, sol.quantum, mode, scheme.shift());
    return ode_residual(sol.dominant(), sol.grid, spec, sol.energy);
}

FirstOrderReport first_order_residual(const SpinorSolution& sol, const ModelParams& p)
{
    const std::size_t k = sol.grid.size();
    if (k < 36)
        throw DomainError("grid too coarse for a residual check (need 32 interior points)");
    const double h = sol.grid.h;
    const double delta = p.screening;
    const double e = sol.energy;
    const double kap = sol.quantum.kappa;
    const bool spin = sol.symmetry == Symmetry::Spin;
    const bool r1 = sol.scheme.scheme == Scheme::ProperR1;
    const double m = p.mass;
    const double c = p.symmetry_constant;
    const double g = p.strength;

    auto d1 = [h](const std::vector<double>& u, std::size_t i) {
        return (-u[i + 2] + 8.0 * u[i + 1] - 8.0 * u[i - 1] + u[i - 2]) / (12.0 * h);
    };

    std::vector<double> closure, coupled;
    double s_closure = 0.0, s_coupled = 0.0;
    for (std::size_t i = 2; i + 2 < k; ++i) {
        const double r = sol.grid.r[i];
        const double t = spin_orbit_factor(r, delta, sol.scheme);
        const double hr = inv_expm1(delta * r);
        const double dF = d1(sol.F, i);
        const double dG = d1(sol.G, i);
        if (spin) {
            // (d/dr + kappa t) F = (M + E - C_s) G
            const double lhs1 = dF + kap * t * sol.F[i];
            const double rhs1 = (m + e - c) * sol.G[i];
            // (d/dr - kappa t) G = (M - E + Sigma(r)) F, Sigma = -Sigma0 h (r^-2) or C_s - 2 V0 h (r^-1)
            const double lhs2 = dG - kap * t * sol.G[i];
            const double rhs2 = (r1 ? (m - c) - e - 2.0 * g * hr : m - e - g * hr) * sol.F[i];
            closure.push_back(lhs1 - rhs1);
            coupled.push_back(lhs2 - rhs2);
            s_closure = std::max({s_closure, std::abs(lhs1), std::abs(rhs1)});
            s_coupled = std::max({s_coupled, std::abs(lhs2), std::abs(rhs2)});
        } else {
            // (d/dr - kappa t) G = (M - E + C_ps) F
            const double lhs1 = dG - kap * t * sol.G[i];
            const double rhs1 = (m - e + c) * sol.F[i];
            // (d/dr + kappa t) F = (M + E - Delta(r)) G, Delta = -Delta0 h (r^-2) or C_ps + 2 V0 h (r^-1)
            const double lhs2 = dF + kap * t * sol.F[i];
            const double rhs2 = (r1 ? (m + c) + e + 2.0 * g * hr : m + e + g * hr) * sol.G[i];
            closure.push_back(lhs1 - rhs1);
            coupled.push_back(lhs2 - rhs2);
            s_closure = std::max({s_closure, std::abs(lhs1), std::abs(rhs1)});
            s_coupled = std::max({s_coupled, std::abs(lhs2), std::abs(rhs2)});
        }
    }
    return {summarize(std::move(closure), s_closure), summarize(std::move(coupled), s_coupled)};
}

} // namespace hd
