#include "hd/model.hpp"

#include "hd/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace hd {

void ModelParams::validate() const
{
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw DomainError("mass must be positive and finite");
    if (!(screening > 0.0) || !std::isfinite(screening))
        throw DomainError("screening parameter delta must be positive and finite");
    if (!std::isfinite(strength) || !std::isfinite(symmetry_constant))
        throw DomainError("strength and symmetry constant must be finite");
}

void validate(const QuantumState& state)
{
    if (state.n < 0)
        throw InvalidState("radial quantum number n must be nonnegative");
    if (state.kappa == 0)
        throw InvalidState("kappa must be nonzero");
}

int orbital_l(int kappa) { return kappa > 0 ? kappa : -(kappa + 1); }

int pseudo_orbital_l(int kappa) { return kappa > 0 ? kappa - 1 : -kappa; }

int twice_j(int kappa) { return 2 * std::abs(kappa) - 1; }

int derive_orbital(const QuantumState& state, Symmetry symmetry)
{
    validate(state);
    return symmetry == Symmetry::Spin ? orbital_l(state.kappa) : pseudo_orbital_l(state.kappa);
}

char orbital_letter(int l)
{
    // j is skipped in the usual sequence
    static constexpr char letters[] = "spdfghiklmnoqrtuvwxyz";
    if (l < 0 || l >= static_cast<int>(sizeof(letters) - 1))
        throw DomainError("no spectroscopic letter for l = " + std::to_string(l));
    return letters[l];
}

std::string spectroscopic_label(const QuantumState& state, Symmetry /*symmetry*/)
{
    validate(state);
    return std::to_string(state.n) + orbital_letter(orbital_l(state.kappa)) +
           std::to_string(twice_j(state.kappa)) + "/2";
}

std::optional<QuantumState> doublet_partner(const QuantumState& state, Symmetry symmetry)
{
    validate(state);
    // l = 0 (spin) and l~ = 0 (pseudospin) are singlets
    if (symmetry == Symmetry::Spin) {
        if (state.kappa == -1)
            return std::nullopt;
        return QuantumState{state.n, -state.kappa - 1};
    }
    if (state.kappa == 1)
        return std::nullopt;
    if (state.kappa < 0) {
        if (state.n == 0)
            return std::nullopt;
        return QuantumState{state.n - 1, 1 - state.kappa};
    }
    return QuantumState{state.n + 1, 1 - state.kappa};
}

std::string to_string(Symmetry symmetry)
{
    return symmetry == Symmetry::Spin ? "spin" : "pseudospin";
}

std::string to_string(Scheme scheme)
{
    switch (scheme) {
    case Scheme::ImprovedR2: return "r2";
    case Scheme::ConventionalR2: return "r2-conventional";
    case Scheme::ProperR1: return "r1";
    }
    return "?";
}

Symmetry parse_symmetry(const std::string& text)
{
    if (text == "spin")
        return Symmetry::Spin;
    if (text == "pseudospin")
        return Symmetry::Pseudospin;
    throw DomainError("unknown symmetry '" + text + "' (expected spin or pseudospin)");
}

Scheme parse_scheme(const std::string& text)
{
    if (text == "r2")
        return Scheme::ImprovedR2;
    if (text == "r2-conventional")
        return Scheme::ConventionalR2;
    if (text == "r1")
        return Scheme::ProperR1;
    throw DomainError("unknown scheme '" + text + "' (expected r2, r2-conventional or r1)");
}

} // namespace hd
