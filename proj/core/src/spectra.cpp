#include "hd/spectra.hpp"

#include "hd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hd {

namespace {

constexpr double excluded_window = 1e-9;
constexpr double genuine_rel_tol = 1e-6;
constexpr double unsquared_tol = 1e-9;

double sq(double x) { return x * x; }

void check_symmetry(const ModelParams& p, Symmetry expected)
{
    p.validate();
    if (p.symmetry != expected)
        throw DomainError("parameter set is for " + to_string(p.symmetry) + " symmetry, expected " +
                          to_string(expected));
}

void require_strength(double v)
{
    if (v == 0.0)
        throw DomainError("potential strength must be nonzero");
}

Branch rule_branch(Symmetry s) { return s == Symmetry::Spin ? Branch::Plus : Branch::Minus; }

// Fills roots, excluded-point flags and the selection; validity is filled by the caller.
EnergySolution from_quadratic(const QuadraticForm& q, Symmetry sym, int N, double mass)
{
    EnergySolution out;
    out.quadratic = q;
    out.counting_number = N;
    out.rule = rule_branch(sym);
    const auto roots = solve_quadratic(q);
    out.e_plus = roots.plus;
    out.e_minus = roots.minus;
    const double excluded = sym == Symmetry::Pseudospin ? mass : -mass;
    if (out.e_plus)
        out.near_excluded_plus = std::abs(*out.e_plus - excluded) < excluded_window;
    if (out.e_minus)
        out.near_excluded_minus = std::abs(*out.e_minus - excluded) < excluded_window;
    return out;
}

void finish_selection(EnergySolution& out)
{
    out.selected = out.valid(out.rule) ? out.rule : Branch::None;
}

bool matches(double lhs, double rhs, double tol)
{
    return std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(lhs));
}

// r^-2: epsilon from the unsquared quantization with counting number N; the root
// is genuine when this is positive and equals sqrt(radicand)/delta.
bool genuine_r2(const ModelParams& p, int kappa, int n, double e, double d0)
{
    const double d2 = sq(p.screening);
    const int N = regular_counting_number(n, kappa, p.symmetry, Scheme::ImprovedR2);
    double eps_nu = 0.0;
    double rad = 0.0;
    if (p.symmetry == Symmetry::Pseudospin) {
        const double nu2 = (p.mass - e + p.symmetry_constant) * p.strength / d2;
        eps_nu = -(nu2 / N + N / 4.0);
        rad = radicand_pseudospin_r2(p, kappa, e, d0);
    } else {
        const double nu2 = (p.mass + e - p.symmetry_constant) * p.strength / d2;
        eps_nu = nu2 / N - N / 4.0;
        rad = radicand_spin_r2(p, kappa, e, d0);
    }
    if (!(eps_nu > 0.0) || !(rad > 0.0))
        return false;
    return matches(eps_nu, std::sqrt(rad) / p.screening, genuine_rel_tol);
}

double effective_mass_r1(const ModelParams& p)
{
    return p.symmetry == Symmetry::Spin ? p.mass - p.symmetry_constant : p.mass + p.symmetry_constant;
}

bool valid_r1(const ModelParams& p, int kappa, int N, double e)
{
    const double m = effective_mass_r1(p);
    if (!(std::abs(e) < m))
        return false;
    if (p.symmetry == Symmetry::Spin && 2.0 * (e + m) * p.strength < 0.0)
        return false;
    const double rhs = r1_unsquared_rhs(p, kappa, N, e);
    if (!(rhs >= 0.0))
        return false;
    return std::abs(rhs - std::sqrt(m * m - e * e)) <= unsquared_tol * std::max(1.0, m);
}

} // namespace

std::string to_string(Branch branch)
{
    switch (branch) {
    case Branch::Plus: return "plus";
    case Branch::Minus: return "minus";
    case Branch::None: return "none";
    }
    return "?";
}

double QuadraticForm::relative_residual(double e) const
{
    const double scale = std::max({1.0, std::abs(a2 * e * e), std::abs(a1 * e), std::abs(a0)});
    return std::abs(residual(e)) / scale;
}

QuadraticRoots solve_quadratic(const QuadraticForm& q)
{
    if (!(q.a2 != 0.0))
        throw DomainError("energy quadratic has a vanishing leading coefficient");
    const double disc = q.a1 * q.a1 - 4.0 * q.a2 * q.a0;
    if (!(disc >= 0.0))
        return {};
    const double s = std::sqrt(disc);
    // a2 E^2 - a1 E + a0: E = (a1 +/- s) / (2 a2)
    const double big = q.a1 >= 0.0 ? (q.a1 + s) / (2.0 * q.a2) : (q.a1 - s) / (2.0 * q.a2);
    const double small = big != 0.0 ? q.a0 / (q.a2 * big) : 0.0;
    return {std::max(big, small), std::min(big, small)};
}

std::optional<double> EnergySolution::energy(Branch b) const
{
    if (b == Branch::Plus)
        return e_plus;
    if (b == Branch::Minus)
        return e_minus;
    return std::nullopt;
}

bool EnergySolution::valid(Branch b) const
{
    if (b == Branch::Plus)
        return e_plus && valid_plus;
    if (b == Branch::Minus)
        return e_minus && valid_minus;
    return false;
}

bool EnergySolution::genuine(Branch b) const
{
    if (b == Branch::Plus)
        return e_plus && genuine_plus;
    if (b == Branch::Minus)
        return e_minus && genuine_minus;
    return false;
}

double EnergySolution::selected_energy() const
{
    if (selected == Branch::None)
        throw NotBoundState("no valid bound-state branch for this state");
    return *energy(selected);
}

double EnergySolution::rule_energy() const
{
    auto e = energy(rule);
    if (!e)
        throw NotBoundState("energy quadratic has no real roots for this state");
    return *e;
}

int counting_number_raw(int n, int kappa, Symmetry symmetry, Scheme scheme)
{
    validate(QuantumState{n, kappa});
    const int l = derive_orbital({n, kappa}, symmetry);
    const int base = kappa > 0 ? n + l + 1 : n - l;
    return scheme == Scheme::ProperR1 ? base : 2 * base;
}

int counting_number(int n, int kappa, Symmetry symmetry, Scheme scheme)
{
    const int N = counting_number_raw(n, kappa, symmetry, scheme);
    if (N <= 0)
        throw InvalidState("counting number " + std::to_string(N) + " for n=" + std::to_string(n) +
                           ", kappa=" + std::to_string(kappa) + " is not positive");
    return N;
}

int regular_counting_number(int n, int kappa, Symmetry symmetry, Scheme scheme)
{
    validate(QuantumState{n, kappa});
    const int base = n + derive_orbital({n, kappa}, symmetry) + 1;
    return scheme == Scheme::ProperR1 ? base : 2 * base;
}

QuadraticForm pseudospin_r2_coefficients(double mass, double delta0, double cps, double delta, int N,
                                         int kappa, double d0)
{
    require_strength(delta0);
    const double d2 = delta * delta;
    const double s = (cps + mass) * delta0 / d2;
    const double u = s / N + N / 4.0;
    const double kk = static_cast<double>(kappa) * (kappa - 1);
    return {1.0 + sq(delta0 / (N * delta)), cps + 2.0 * delta0 * u / N,
            d2 * (u * u - s * mass / delta0 - kk * d0)};
}

QuadraticForm spin_r2_coefficients(double mass, double sigma0, double cs, double delta, int N, int kappa,
                                   double d0)
{
    require_strength(sigma0);
    const double d2 = delta * delta;
    const double t = (cs - mass) * sigma0 / d2;
    const double w = t / N + N / 4.0;
    const double kk = static_cast<double>(kappa) * (kappa + 1);
    return {1.0 + sq(sigma0 / (N * delta)), cs + 2.0 * sigma0 * w / N,
            d2 * (w * w + t * mass / sigma0 - kk * d0)};
}

QuadraticForm spin_r1_coefficients(double ms, double v0, double delta, int N, int kappa)
{
    const double d2 = delta * delta;
    const double nn = static_cast<double>(N) * N;
    const double kk = static_cast<double>(kappa) * kappa;
    const double q = v0 * (d2 * (nn - kk) - 2.0 * v0 * ms);
    const double pp = v0 * v0 + d2 * nn;
    const double w = ms * (ms * pp + q) + 0.25 * d2 * d2 * (kk * (2.0 * nn - kk) - nn * nn);
    return {pp, q, -w};
}

QuadraticForm pseudospin_r1_coefficients(double mps, double v0, double delta, int N, int kappa)
{
    const double d2 = delta * delta;
    const double nn = static_cast<double>(N) * N;
    const double kk = static_cast<double>(kappa) * kappa;
    const double q = v0 * (d2 * (nn - kk) + 2.0 * v0 * mps);
    const double pp = v0 * v0 + d2 * nn;
    const double w = mps * (mps * pp - q) + 0.25 * d2 * d2 * (kk * (2.0 * nn - kk) - nn * nn);
    return {pp, q, -w};
}

QuadraticForm quadratic_pseudospin_r2(const ModelParams& p, const QuantumState& s, double d0)
{
    check_symmetry(p, Symmetry::Pseudospin);
    const int N = counting_number(s.n, s.kappa, Symmetry::Pseudospin, Scheme::ImprovedR2);
    return pseudospin_r2_coefficients(p.mass, p.strength, p.symmetry_constant, p.screening, N, s.kappa, d0);
}

QuadraticForm quadratic_spin_r2(const ModelParams& p, const QuantumState& s, double d0)
{
    check_symmetry(p, Symmetry::Spin);
    const int N = counting_number(s.n, s.kappa, Symmetry::Spin, Scheme::ImprovedR2);
    return spin_r2_coefficients(p.mass, p.strength, p.symmetry_constant, p.screening, N, s.kappa, d0);
}

double radicand_pseudospin_r2(const ModelParams& p, int kappa, double e, double d0)
{
    const double kk = static_cast<double>(kappa) * (kappa - 1);
    return p.mass * p.mass - e * e + p.symmetry_constant * (e + p.mass) + kk * sq(p.screening) * d0;
}

double radicand_spin_r2(const ModelParams& p, int kappa, double e, double d0)
{
    const double kk = static_cast<double>(kappa) * (kappa + 1);
    return p.mass * p.mass - e * e + p.symmetry_constant * (e - p.mass) + kk * sq(p.screening) * d0;
}

namespace {

EnergySolution finish_r2(const ModelParams& p, const QuantumState& s, const QuadraticForm& q, int N,
                         double d0)
{
    EnergySolution out = from_quadratic(q, p.symmetry, N, p.mass);
    auto radicand = [&](double e) {
        return p.symmetry == Symmetry::Pseudospin ? radicand_pseudospin_r2(p, s.kappa, e, d0)
                                                  : radicand_spin_r2(p, s.kappa, e, d0);
    };
    if (out.e_plus) {
        out.valid_plus = radicand(*out.e_plus) > 0.0;
        out.genuine_plus = genuine_r2(p, s.kappa, s.n, *out.e_plus, d0);
    }
    if (out.e_minus) {
        out.valid_minus = radicand(*out.e_minus) > 0.0;
        out.genuine_minus = genuine_r2(p, s.kappa, s.n, *out.e_minus, d0);
    }
    finish_selection(out);
    return out;
}

// Closed form of the r^-2 quadratic at C = 0:
// E = [g X +/- N delta sqrt((N^2 delta^2 + g^2)(M^2 + kk delta^2 d0) - X^2)] / (N^2 delta^2 + g^2)
// with X = +/-M g + N^2 delta^2 / 4.
QuadraticRoots exact_r2_roots(double mass_signed, double g, double delta, int N, double kk, double d0)
{
    const double nd2 = sq(N * delta);
    const double x = mass_signed * g + nd2 / 4.0;
    const double den = nd2 + g * g;
    const double rad = den * (sq(mass_signed) + kk * delta * delta * d0) - x * x;
    if (!(rad >= 0.0))
        return {};
    const double root = N * delta * std::sqrt(rad);
    return {(g * x + root) / den, (g * x - root) / den};
}

} // namespace

EnergySolution energy_pseudospin_r2(const ModelParams& p, const QuantumState& s, double d0)
{
    const QuadraticForm q = quadratic_pseudospin_r2(p, s, d0);
    const int N = counting_number(s.n, s.kappa, Symmetry::Pseudospin, Scheme::ImprovedR2);
    return finish_r2(p, s, q, N, d0);
}

EnergySolution energy_spin_r2(const ModelParams& p, const QuantumState& s, double d0)
{
    const QuadraticForm q = quadratic_spin_r2(p, s, d0);
    const int N = counting_number(s.n, s.kappa, Symmetry::Spin, Scheme::ImprovedR2);
    return finish_r2(p, s, q, N, d0);
}

EnergySolution energy_pseudospin_r2_exact(const ModelParams& p, const QuantumState& s, double d0)
{
    if (p.symmetry_constant != 0.0)
        throw DomainError("exact pseudospin form requires C_ps = 0");
    const QuadraticForm q = quadratic_pseudospin_r2(p, s, d0);
    const int N = counting_number(s.n, s.kappa, Symmetry::Pseudospin, Scheme::ImprovedR2);
    EnergySolution out = finish_r2(p, s, q, N, d0);
    const auto r = exact_r2_roots(p.mass, p.strength, p.screening, N,
                                  static_cast<double>(s.kappa) * (s.kappa - 1), d0);
    out.e_plus = r.plus;
    out.e_minus = r.minus;
    return out;
}

EnergySolution energy_spin_r2_exact(const ModelParams& p, const QuantumState& s, double d0)
{
    if (p.symmetry_constant != 0.0)
        throw DomainError("exact spin form requires C_s = 0");
    const QuadraticForm q = quadratic_spin_r2(p, s, d0);
    const int N = counting_number(s.n, s.kappa, Symmetry::Spin, Scheme::ImprovedR2);
    EnergySolution out = finish_r2(p, s, q, N, d0);
    const auto r = exact_r2_roots(-p.mass, p.strength, p.screening, N,
                                  static_cast<double>(s.kappa) * (s.kappa + 1), d0);
    out.e_plus = r.plus;
    out.e_minus = r.minus;
    return out;
}

double r1_unsquared_rhs(const ModelParams& p, int kappa, int N, double e)
{
    const double d = p.screening;
    const double kk = static_cast<double>(kappa) * kappa;
    const double coupling = p.symmetry == Symmetry::Spin ? 2.0 * (e + effective_mass_r1(p)) * p.strength
                                                         : 2.0 * (e - effective_mass_r1(p)) * p.strength;
    return (coupling + kk * d * d) / (2.0 * N * d) - N * d / 2.0;
}

namespace {

EnergySolution finish_r1(const ModelParams& p, const QuantumState& s, const QuadraticForm& q, int N)
{
    EnergySolution out = from_quadratic(q, p.symmetry, N, p.mass);
    const int n_reg = regular_counting_number(s.n, s.kappa, p.symmetry, Scheme::ProperR1);
    if (out.e_plus) {
        out.valid_plus = valid_r1(p, s.kappa, N, *out.e_plus);
        out.genuine_plus = valid_r1(p, s.kappa, n_reg, *out.e_plus);
    }
    if (out.e_minus) {
        out.valid_minus = valid_r1(p, s.kappa, N, *out.e_minus);
        out.genuine_minus = valid_r1(p, s.kappa, n_reg, *out.e_minus);
    }
    finish_selection(out);
    return out;
}

} // namespace

EnergySolution energy_spin_r1(const ModelParams& p, const QuantumState& s)
{
    check_symmetry(p, Symmetry::Spin);
    const int N = counting_number(s.n, s.kappa, Symmetry::Spin, Scheme::ProperR1);
    const auto q = spin_r1_coefficients(effective_mass_r1(p), p.strength, p.screening, N, s.kappa);
    return finish_r1(p, s, q, N);
}

EnergySolution energy_pseudospin_r1(const ModelParams& p, const QuantumState& s)
{
    check_symmetry(p, Symmetry::Pseudospin);
    const int N = counting_number(s.n, s.kappa, Symmetry::Pseudospin, Scheme::ProperR1);
    const auto q = pseudospin_r1_coefficients(effective_mass_r1(p), p.strength, p.screening, N, s.kappa);
    return finish_r1(p, s, q, N);
}

EnergySolution solve_energy(const ModelParams& p, const QuantumState& s, const SchemeConfig& scheme)
{
    if (scheme.scheme == Scheme::ProperR1)
        return p.symmetry == Symmetry::Spin ? energy_spin_r1(p, s) : energy_pseudospin_r1(p, s);
    return p.symmetry == Symmetry::Spin ? energy_spin_r2(p, s, scheme.shift())
                                        : energy_pseudospin_r2(p, s, scheme.shift());
}

std::string to_string(NonrelVariant v)
{
    switch (v) {
    case NonrelVariant::ImprovedD0: return "improved";
    case NonrelVariant::Traditional: return "traditional";
    case NonrelVariant::ProperR1: return "r1";
    }
    return "?";
}

namespace {

void check_nonrel(int n, int l, double m, double delta)
{
    if (n < 0 || l < 0)
        throw DomainError("n and l must be nonnegative");
    if (!(m > 0.0) || !(delta > 0.0))
        throw DomainError("mass and delta must be positive");
}

} // namespace

double nonrel_decay_parameter(int n, int l, double m, double v0, double delta, NonrelVariant variant)
{
    check_nonrel(n, l, m, delta);
    const double N = n + l + 1;
    const double d2 = delta * delta;
    if (variant == NonrelVariant::ProperR1)
        return (2.0 * m * v0 / d2 + static_cast<double>(l) * l) / (2.0 * N) - N / 2.0;
    return m * v0 / (d2 * N) - N / 2.0;
}

double energy_nonrel(int n, int l, double m, double v0, double delta, NonrelVariant variant)
{
    const double a = nonrel_decay_parameter(n, l, m, v0, delta, variant);
    const double d2 = delta * delta;
    const double ll = static_cast<double>(l) * (l + 1);
    switch (variant) {
    case NonrelVariant::ImprovedD0: return d2 / (2.0 * m) * (ll / 12.0 - a * a);
    case NonrelVariant::Traditional:
    case NonrelVariant::ProperR1: return -d2 / (2.0 * m) * a * a;
    }
    return 0.0;
}

} // namespace hd
