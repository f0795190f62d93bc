#pragma once

#include "hd/model.hpp"

#include <array>

namespace hd {

/// Parametric Nikiforov-Uvarov constants for one of the four instances
/// (spin/pseudospin x r^-2/r^-1). Index k of `c` holds c_k; c[0] is unused.
struct NUInstance {
    Symmetry symmetry;
    Scheme scheme;
    int kappa;
    std::array<double, 17> c{};
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;

    /// lambda = xi1 - xi3 - c14 (c14 + 2 c13)
    double lambda() const;
    /// lambda_n = n^2 + 2n(c13 + c14)
    double lambda_n(int n) const;
};

/// alpha is the decay parameter (epsilon for r^-2, alpha_{1,2} for r^-1) and
/// beta_sq the coupling parameter (nu^2 for r^-2, beta^2 for r^-1), which may
/// be negative. For r^-2 instances the shift d0 enters A and B.
/// c15 and c16 are stored for completeness; nothing downstream uses them.
NUInstance build_instance(Symmetry symmetry, Scheme scheme, double alpha, double beta_sq, int kappa);

/// lambda - lambda_n; zero exactly on the quantization condition.
double eigenvalue_condition(const NUInstance& instance, int n);

} // namespace hd
