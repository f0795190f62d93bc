#pragma once

#include <optional>
#include <string>

namespace hd {

enum class Symmetry { Spin, Pseudospin };

enum class Scheme { ImprovedR2, ConventionalR2, ProperR1 };

/// Which centrifugal substitution is in force.
struct SchemeConfig {
    Scheme scheme = Scheme::ImprovedR2;
    double d0 = 1.0 / 12.0; ///< shift of the r^-2 substitute; ignored by ProperR1

    static SchemeConfig improved(double d0 = 1.0 / 12.0) { return {Scheme::ImprovedR2, d0}; }
    static SchemeConfig conventional() { return {Scheme::ConventionalR2, 0.0}; }
    static SchemeConfig proper_r1() { return {Scheme::ProperR1, 0.0}; }

    /// Effective shift: ConventionalR2 always uses zero.
    double shift() const { return scheme == Scheme::ImprovedR2 ? d0 : 0.0; }
    bool is_r2() const { return scheme != Scheme::ProperR1; }
};

/// All quantities in fm^-1 (hbar = c = 1).
struct ModelParams {
    double mass = 5.0;
    double screening = 0.1;         ///< delta
    double strength = 3.4;          ///< V0 = Delta0 = Sigma0
    double symmetry_constant = 0.0; ///< C_s or C_ps
    Symmetry symmetry = Symmetry::Spin;

    /// Throws DomainError unless mass > 0 and screening > 0.
    void validate() const;
};

struct QuantumState {
    int n = 0;
    int kappa = -1;

    bool operator==(const QuantumState&) const = default;
};

void validate(const QuantumState& state);

/// l for spin symmetry, l~ for pseudospin symmetry.
int derive_orbital(const QuantumState& state, Symmetry symmetry);

/// Orbital angular momentum of the upper component (used for labels).
int orbital_l(int kappa);
/// Pseudo-orbital angular momentum.
int pseudo_orbital_l(int kappa);

/// Twice the total angular momentum, 2j = 2|kappa| - 1.
int twice_j(int kappa);

char orbital_letter(int l);

/// For example "1s1/2". The letter always follows l; the symmetry does not change it.
std::string spectroscopic_label(const QuantumState& state, Symmetry symmetry);

/// Pseudospin: (n, -l~) <-> (n-1, l~+1).  Spin: (n, kappa) <-> (n, -kappa-1). Empty for the l = 0 or l~ = 0 singlets.
std::optional<QuantumState> doublet_partner(const QuantumState& state, Symmetry symmetry);

std::string to_string(Symmetry symmetry);
std::string to_string(Scheme scheme);
Symmetry parse_symmetry(const std::string& text);
Scheme parse_scheme(const std::string& text);

} // namespace hd
