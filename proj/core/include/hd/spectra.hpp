#pragma once

#include "hd/model.hpp"

#include <optional>

namespace hd {

enum class Branch { Plus, Minus, None };

std::string to_string(Branch branch);

/// a2 E^2 - a1 E + a0 = 0.
struct QuadraticForm {
    double a2 = 0.0;
    double a1 = 0.0;
    double a0 = 0.0;

    double residual(double e) const { return (a2 * e - a1) * e + a0; }
    /// Residual divided by the largest term magnitude (at least 1).
    double relative_residual(double e) const;
};

struct QuadraticRoots {
    std::optional<double> plus;  ///< larger root
    std::optional<double> minus; ///< smaller root
};

/// Stable solution: larger-magnitude root first, the other from a0 / (a2 r1).
QuadraticRoots solve_quadratic(const QuadraticForm& q);

struct EnergySolution {
    std::optional<double> e_plus;
    std::optional<double> e_minus;
    Branch selected = Branch::None; ///< rule branch if it is real and valid
    Branch rule = Branch::None;     ///< Minus for pseudospin, Plus for spin
    int counting_number = 0;
    bool valid_plus = false;
    bool valid_minus = false;
    /// Root also satisfies the unsquared quantization with the regular
    /// small-r exponent, i.e. it is an eigenvalue of the approximated ODE.
    bool genuine_plus = false;
    bool genuine_minus = false;
    /// Root within 1e-9 of the excluded point (+M pseudospin, -M spin).
    bool near_excluded_plus = false;
    bool near_excluded_minus = false;
    QuadraticForm quadratic;

    std::optional<double> energy(Branch b) const;
    bool valid(Branch b) const;
    bool genuine(Branch b) const;
    /// Energy of `selected`; throws NotBoundState when selected is None.
    double selected_energy() const;
    /// Energy of `rule`, real or not-valid; throws NotBoundState when not real.
    double rule_energy() const;
};

/// Counting number as printed: r^-2 N1 = 2(n+l~+1) | 2(n-l~), N2 likewise with l;
/// r^-1 N_s = n+l+1 | n-l, N_ps likewise with l~. May be <= 0.
int counting_number_raw(int n, int kappa, Symmetry symmetry, Scheme scheme);

/// Same, but throws InvalidState when the result is <= 0.
int counting_number(int n, int kappa, Symmetry symmetry, Scheme scheme);

/// Counting number of the regular solution: the small-r exponent is l+1 (or l~+1)
/// for either sign of kappa.
int regular_counting_number(int n, int kappa, Symmetry symmetry, Scheme scheme);

// Coefficients for an explicit counting number N.
QuadraticForm pseudospin_r2_coefficients(double mass, double delta0, double cps, double delta, int N,
                                         int kappa, double d0);
QuadraticForm spin_r2_coefficients(double mass, double sigma0, double cs, double delta, int N, int kappa,
                                   double d0);
/// P E^2 - Q E - W = 0 with M_s = M - C_s.
QuadraticForm spin_r1_coefficients(double ms, double v0, double delta, int N, int kappa);
/// P E^2 - Q E - W = 0 with M_ps = M + C_ps.
QuadraticForm pseudospin_r1_coefficients(double mps, double v0, double delta, int N, int kappa);

QuadraticForm quadratic_pseudospin_r2(const ModelParams& p, const QuantumState& s, double d0 = 1.0 / 12.0);
QuadraticForm quadratic_spin_r2(const ModelParams& p, const QuantumState& s, double d0 = 1.0 / 12.0);

/// Bound-state radicands, (epsilon delta)^2 of the r^-2 schemes.
double radicand_pseudospin_r2(const ModelParams& p, int kappa, double e, double d0);
double radicand_spin_r2(const ModelParams& p, int kappa, double e, double d0);

EnergySolution energy_pseudospin_r2(const ModelParams& p, const QuantumState& s, double d0 = 1.0 / 12.0);
EnergySolution energy_spin_r2(const ModelParams& p, const QuantumState& s, double d0 = 1.0 / 12.0);
/// Closed forms at C = 0 (strength kept explicit); requires a zero symmetry constant.
EnergySolution energy_pseudospin_r2_exact(const ModelParams& p, const QuantumState& s,
                                          double d0 = 1.0 / 12.0);
EnergySolution energy_spin_r2_exact(const ModelParams& p, const QuantumState& s, double d0 = 1.0 / 12.0);
EnergySolution energy_spin_r1(const ModelParams& p, const QuantumState& s);
EnergySolution energy_pseudospin_r1(const ModelParams& p, const QuantumState& s);

/// Dispatch on params.symmetry and scheme.
EnergySolution solve_energy(const ModelParams& p, const QuantumState& s, const SchemeConfig& scheme);

/// Right-hand side of the unsquared r^-1 condition, alpha * delta as a function of E.
double r1_unsquared_rhs(const ModelParams& p, int kappa, int N, double e);

enum class NonrelVariant { ImprovedD0, Traditional, ProperR1 };

std::string to_string(NonrelVariant v);

/// Bound levels of -u''/2m + [l(l+1)/2m r^2 - V0 e^{-delta r}/(1-e^{-delta r})] u = E u
/// with the orbital term replaced per variant (V0 > 0 attractive).
double energy_nonrel(int n, int l, double m, double v0, double delta, NonrelVariant variant);

/// Decay parameter of the nonrelativistic radial function (epsilon of the
/// r^-2 forms or lambda of the r^-1 form), from the quantization condition.
double nonrel_decay_parameter(int n, int l, double m, double v0, double delta, NonrelVariant variant);

} // namespace hd
