#pragma once

#include "hd/model.hpp"

#include <span>
#include <vector>

namespace hd {

/// Which sign of kappa(kappa +/- 1) the orbital term carries.
/// Upper (+) appears in the spin equation, Lower (-) in the pseudospin one.
enum class OrbitalSign { Upper, Lower };

inline OrbitalSign orbital_sign(Symmetry symmetry)
{
    return symmetry == Symmetry::Spin ? OrbitalSign::Upper : OrbitalSign::Lower;
}

/// kappa(kappa+1) or kappa(kappa-1).
double centrifugal_factor(int kappa, OrbitalSign sign);

/// 1/(e^{x}-1), stable for small x.
double inv_expm1(double x);

/// W(r) = delta / (e^{delta r} - 1).
double hulthen_w(double r, double delta);

/// W'(r) = -(W^2 + delta W).
double hulthen_w_prime(double r, double delta);

/// delta^2 [d0 + 1/(e^{delta r}-1) + 1/(e^{delta r}-1)^2], the substitute for 1/r^2.
double improved_inv_r2(double r, double delta, double d0);

/// kappa^2 W^2 -/+ kappa W'; substitutes kappa(kappa +/- 1)/r^2.
double proper_orbital_term(double r, double delta, int kappa, OrbitalSign sign);

/// Substitutes the exact orbital term kappa(kappa +/- 1)/r^2 according to the scheme.
double orbital_term(double r, double delta, int kappa, OrbitalSign sign, const SchemeConfig& scheme);

enum class Comparator { ImprovedR2, ConventionalR2, ProperR1, HulthenSquare };

struct ApproxRow {
    double r;
    double exact;
    double approximated;
    double abs_error;
};

struct ApproxProfile {
    Comparator comparator;
    std::vector<ApproxRow> rows;
};

/// Compares kappa(kappa +/- 1)/r^2 with a substitute on the given grid.
/// HulthenSquare is the plain kappa(kappa +/- 1) W^2 form.
ApproxProfile error_profile(Comparator comparator, double d0, double delta, int kappa,
                            OrbitalSign sign, std::span<const double> grid);

ApproxProfile error_profile(const SchemeConfig& scheme, double delta, int kappa, OrbitalSign sign,
                            std::span<const double> grid);

} // namespace hd
