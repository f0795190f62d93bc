#pragma once

#include "hd/cli/presets.hpp"
#include "hd/oracle.hpp"
#include "hd/spectra.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hd::cli {

enum ExitCode : int { exit_ok = 0, exit_invalid_config = 2, exit_no_bound_state = 3, exit_oracle_failure = 4 };

struct TableEntry {
    const TableRow* row = nullptr;
    double delta = 0.0;
    SchemeConfig scheme;
    EnergySolution solution;
    double reference = 0.0;
    std::optional<double> reference_w2;

    /// Energy on the symmetry's branch, whether or not it passes the validity checks.
    std::optional<double> energy() const { return solution.energy(solution.rule); }
};

/// Every (row, delta, scheme) entry of a preset evaluated with `params`
/// (the preset parameters unless overridden). Delta is taken from the table.
std::vector<TableEntry> compute_table(const TablePreset& preset, const ModelParams& params,
                                      std::optional<double> d0 = std::nullopt);

enum class SweepAxis { Delta, Mass, Constant };

SweepAxis parse_axis(const std::string& text);
std::string to_string(SweepAxis axis);

struct SweepPoint {
    double axis_value = 0.0;
    QuantumState state;
    std::optional<EnergySolution> solution;
    std::string error;
};

/// steps >= 1 points from `from` to `to` inclusive (one point when steps = 1).
/// Output order is axis-major then state order, independent of `jobs`.
std::vector<SweepPoint> compute_sweep(const ModelParams& base, const SchemeConfig& scheme, SweepAxis axis,
                                      double from, double to, int steps, const std::vector<QuantumState>& states,
                                      int jobs);

/// Energy window handed to the shooter around a reference energy.
std::pair<double, double> oracle_bracket(double e_ref, bool exact_mode);

struct OracleOutcome {
    std::optional<ShootResult> result;
    std::string error;
};

OracleOutcome run_oracle(const ModelParams& p, const QuantumState& s, OdeMode mode, double d0, double e_ref,
                         const ShootOptions& options = {});

struct CompareRow {
    SchemeConfig scheme;
    std::optional<EnergySolution> closed_form;
    std::string closed_form_error;
    OracleOutcome oracle;
};

struct CompareReport {
    std::vector<CompareRow> rows;
    OracleOutcome exact;
};

/// Improved r^-2 and proper r^-1 closed forms, their approximated-ODE oracles,
/// and the oracle on the exact centrifugal equation.
CompareReport compute_compare(const ModelParams& p, const QuantumState& s, double d0,
                              const ShootOptions& options = {});

/// Entry point of the `hd` tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hd::cli
