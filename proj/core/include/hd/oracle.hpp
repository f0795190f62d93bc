#pragma once

#include "hd/model.hpp"
#include "hd/spectra.hpp"

#include <functional>
#include <span>

namespace hd {

enum class OdeMode { ExactCentrifugal, SchemeR2, SchemeR1 };

std::string to_string(OdeMode mode);

/// y'' = q(r, E) y with
///   q(r, E) = orbital(r) + coupling(E) h(r) + asymptote(E),  h(r) = e^{-delta r}/(1 - e^{-delta r}).
/// Both the potential coefficient and the constant term depend on E.
struct OdeSpec {
    std::function<double(double)> orbital;
    std::function<double(double)> coupling;
    std::function<double(double)> asymptote;
    double delta = 0.1;
    double centrifugal = 0.0; ///< L(L+1), the r^-2 coefficient of orbital() at small r

    double q(double r, double e) const;
    /// L >= 0 with L(L+1) = centrifugal; the regular solution behaves as r^{L+1}.
    double small_r_power() const;
    /// sqrt(q(infinity, E)), or 0 when E is not below the continuum.
    double decay_rate(double e) const;
};

/// Exact forms keep kappa(kappa +/- 1)/r^2 with the Hulthen Sigma(r) or Delta(r)
/// of amplitude `strength`. SchemeR2 substitutes the shifted r^-2 form. SchemeR1
/// uses kappa^2 W^2 -/+ kappa W' with the 2(E +/- M_{s,ps}) V(r) coupling.
OdeSpec build_ode(const ModelParams& p, const QuantumState& s, OdeMode mode, double d0 = 1.0 / 12.0);

/// u'' = [orbital - 2 m V0 h(r) - 2 m E] u, orbital per variant.
OdeSpec build_nonrel_ode(int l, double m, double v0, double delta, NonrelVariant variant);

struct ShootOptions {
    double step = 0.0;        ///< 0 selects min(0.01/delta, 0.01) fm
    double energy_tol = 1e-12;
    int scan_points = 160;
    double r_start = 1e-4;    ///< first integration point, fm
    double grading_radius = 0.25; ///< steps shrink linearly below this radius
    double r_max_cap = 6000.0;
};

struct ShootResult {
    double energy = 0.0;
    int node_count = 0;
    double match_defect = 0.0;
    int iterations = 0;
    bool defect_monotone = false;
    double r_match = 0.0;
    double r_max = 0.0;
};

/// Finds the eigenvalue with `target_nodes` nodes inside [e_lo, e_hi]. Throws
/// NoEigenvalue when no such eigenvalue is bracketed, IntegrationError on overflow.
ShootResult shoot_eigenvalue(const OdeSpec& spec, int target_nodes, double e_lo, double e_hi,
                             const ShootOptions& options = {});

/// Strict sign changes, ignoring entries below 1e-12 of the largest magnitude.
int node_count(std::span<const double> values);

} // namespace hd
