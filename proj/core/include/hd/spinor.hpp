#pragma once

#include "hd/model.hpp"
#include "hd/oracle.hpp"
#include "hd/spectra.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace hd {

/// Uniform grid in r excluding the origin.
struct RadialGrid {
    std::vector<double> r;
    double h = 0.0;

    static RadialGrid uniform(double r_min, double r_max, std::size_t points);
    /// r_min = max(1e-4/delta, 1e-3); r_max large enough for e^{-delta r} < 1e-12
    /// and for a decay e^{-rate r} to drop below 1e-11.
    static RadialGrid for_state(double delta, double decay_rate, std::size_t points);

    std::size_t size() const { return r.size(); }
};

struct SpinorSolution {
    RadialGrid grid;
    std::vector<double> F;
    std::vector<double> G;
    double energy = 0.0;
    double norm_constant = 1.0;
    QuantumState quantum;
    SchemeConfig scheme;
    Symmetry symmetry = Symmetry::Spin;

    /// F for spin symmetry, G for pseudospin symmetry.
    const std::vector<double>& dominant() const { return symmetry == Symmetry::Spin ? F : G; }
};

/// The solvable component e^{-a delta r} (1-e^{-delta r})^gamma 2F1(-n, n+2(a+gamma); 1+2a; e^{-delta r})
/// and its r-derivative.
struct ClosedComponent {
    int n = 0;
    double a = 0.0;     ///< decay parameter (epsilon or alpha)
    double gamma = 1.0; ///< small-r power, l+1 or l~+1
    double delta = 0.1;

    double value(double r) const;
    double derivative(double r) const;
};

/// Decay parameter and exponent for a state at energy E. Throws NotBoundState when
/// E is not an eigenvalue of the scheme's regular problem.
ClosedComponent closed_component(const ModelParams& p, const QuantumState& s, double e, const SchemeConfig& scheme);

std::vector<double> lower_pseudospin_r2(const ModelParams& p, const QuantumState& s, double e,
                                        const RadialGrid& grid, double d0 = 1.0 / 12.0);
/// F = (G' - kappa G / r) / (M - E + C_ps).
std::vector<double> upper_from_lower_pseudospin_r2(const ModelParams& p, const QuantumState& s, double e,
                                                   const RadialGrid& grid, double d0 = 1.0 / 12.0);
std::vector<double> upper_spin_r2(const ModelParams& p, const QuantumState& s, double e,
                                  const RadialGrid& grid, double d0 = 1.0 / 12.0);
/// G = (F' + kappa F / r) / (M + E - C_s).
std::vector<double> lower_spin_r2(const ModelParams& p, const QuantumState& s, double e,
                                  const RadialGrid& grid, double d0 = 1.0 / 12.0);
/// (F, G) for the proper r^-1 scheme; the companion uses kappa W(r) in place of kappa/r.
std::pair<std::vector<double>, std::vector<double>> spinor_r1(const ModelParams& p, const QuantumState& s,
                                                              double e, const RadialGrid& grid);

/// R(r) for the nonrelativistic variants: the r^-2 forms carry a 1/r prefactor,
/// the r^-1 form is the reduced function itself. Energy from energy_nonrel.
std::vector<double> nonrel_radial(int n, int l, double m, double v0, double delta, NonrelVariant variant,
                                  const RadialGrid& grid);

/// Unnormalized (F, G) on the given grid.
SpinorSolution make_spinor(const ModelParams& p, const QuantumState& s, double e, const SchemeConfig& scheme,
                           const RadialGrid& grid);

/// Composite Simpson; an even number of intervals uses a trapezoid on the last one.
double simpson(std::span<const double> f, double h);

double norm_integral(const SpinorSolution& sol);

/// Scales so that the integral of F^2 + G^2 is 1. Throws DomainError for zero or
/// non-finite components.
SpinorSolution normalize(const SpinorSolution& sol);

struct SpinorOptions {
    std::size_t initial_points = 2049;
    std::size_t max_points = 1u << 19;
    double norm_tol = 1e-8;
};

/// Grid selection with doubling until the norm integral is stable, then normalize.
SpinorSolution build_spinor(const ModelParams& p, const QuantumState& s, double e, const SchemeConfig& scheme,
                            const SpinorOptions& options = {});

struct ResidualReport {
    double max = 0.0;
    double rms = 0.0;
    bool degenerate = false;
    std::vector<double> values;
};

/// Residual of u'' = q(r, E) u with a three-point second difference, relative to
/// max(|u''|, |q u|). Needs at least 32 interior points.
ResidualReport ode_residual(std::span<const double> u, const RadialGrid& grid, const OdeSpec& spec, double e);

/// Dominant component in the scheme's second-order equation.
ResidualReport ode_residual(const SpinorSolution& sol, const ModelParams& p, const SchemeConfig& scheme);

struct FirstOrderReport {
    /// Equation carrying the constant potential (defines the companion).
    ResidualReport closure;
    /// Equation carrying the Hulthen potential; exact for r^-1, approximate for r^-2.
    ResidualReport coupled;
};

/// First-order Dirac system checked with fourth-order central differences.
FirstOrderReport first_order_residual(const SpinorSolution& sol, const ModelParams& p);

} // namespace hd
