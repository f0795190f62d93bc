#include "hd/cli/commands.hpp"

#include "hd/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace hd::cli {

std::vector<TableEntry> compute_table(const TablePreset& preset, const ModelParams& params, std::optional<double> d0)
{
    std::vector<TableEntry> out;
    for (const auto& row : preset.rows) {
        for (std::size_t j = 0; j < table_deltas.size(); ++j) {
            for (std::size_t k = 0; k < preset.schemes.size(); ++k) {
                SchemeConfig scheme = preset.schemes[k];
                if (d0 && scheme.scheme == Scheme::ImprovedR2)
                    scheme.d0 = *d0;
                ModelParams p = params;
                p.screening = table_deltas[j];
                TableEntry e;
                e.row = &row;
                e.delta = p.screening;
                e.scheme = scheme;
                e.solution = solve_energy(p, row.state, scheme);
                e.reference = row.reference[k][j];
                if (row.reference_w2)
                    e.reference_w2 = (*row.reference_w2)[j];
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

SweepAxis parse_axis(const std::string& text)
{
    if (text == "delta")
        return SweepAxis::Delta;
    if (text == "mass")
        return SweepAxis::Mass;
    if (text == "constant")
        return SweepAxis::Constant;
    throw DomainError("unknown sweep axis '" + text + "' (expected delta, mass or constant)");
}

std::string to_string(SweepAxis axis)
{
    switch (axis) {
    case SweepAxis::Delta: return "delta";
    case SweepAxis::Mass: return "mass";
    case SweepAxis::Constant: return "constant";
    }
    return "?";
}

std::vector<SweepPoint> compute_sweep(const ModelParams& base, const SchemeConfig& scheme, SweepAxis axis,
                                      double from, double to, int steps, const std::vector<QuantumState>& states,
                                      int jobs)
{
    if (steps < 1)
        throw DomainError("sweep needs at least one step");
    if (states.empty())
        throw DomainError("sweep needs at least one state");
    if (!std::isfinite(from) || !std::isfinite(to))
        throw DomainError("sweep range must be finite");
    if ((axis == SweepAxis::Delta || axis == SweepAxis::Mass) && (from <= 0.0 || to <= 0.0))
        throw DomainError("sweep over " + to_string(axis) + " needs a positive range");
    for (const auto& s : states)
        validate(s);

    std::vector<SweepPoint> points;
    for (int i = 0; i < steps; ++i) {
        const double t = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
        for (const auto& s : states) {
            SweepPoint pt;
            pt.axis_value = from + (to - from) * t;
            pt.state = s;
            points.push_back(pt);
        }
    }

    auto evaluate = [&](SweepPoint& pt) {
        ModelParams p = base;
        switch (axis) {
        case SweepAxis::Delta: p.screening = pt.axis_value; break;
        case SweepAxis::Mass: p.mass = pt.axis_value; break;
        case SweepAxis::Constant: p.symmetry_constant = pt.axis_value; break;
        }
        try {
            pt.solution = solve_energy(p, pt.state, scheme);
        } catch (const std::exception& ex) {
            pt.error = ex.what();
        }
    };

    const int workers = std::clamp(jobs, 1, 256);
    if (workers == 1) {
        for (auto& pt : points)
            evaluate(pt);
        return points;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < points.size(); i = next++)
                evaluate(points[i]);
        });
    }
    pool.clear();
    return points;
}

std::pair<double, double> oracle_bracket(double e_ref, bool exact_mode)
{
    const double w = exact_mode ? std::max(0.25, 0.5 * std::abs(e_ref)) : std::max(0.05, 0.02 * std::abs(e_ref));
    return {e_ref - w, e_ref + w};
}

OracleOutcome run_oracle(const ModelParams& p, const QuantumState& s, OdeMode mode, double d0, double e_ref,
                         const ShootOptions& options)
{
    OracleOutcome out;
    try {
        const OdeSpec spec = build_ode(p, s, mode, d0);
        const auto [lo, hi] = oracle_bracket(e_ref, mode == OdeMode::ExactCentrifugal);
        out.result = shoot_eigenvalue(spec, s.n, lo, hi, options);
    } catch (const NoEigenvalue& ex) {
        out.error = ex.what();
    } catch (const IntegrationError& ex) {
        out.error = ex.what();
    }
    return out;
}

CompareReport compute_compare(const ModelParams& p, const QuantumState& s, double d0, const ShootOptions& options)
{
    p.validate();
    validate(s);
    CompareReport report;
    std::optional<double> reference;
    for (const SchemeConfig& scheme : {SchemeConfig::improved(d0), SchemeConfig::proper_r1()}) {
        CompareRow row;
        row.scheme = scheme;
        try {
            row.closed_form = solve_energy(p, s, scheme);
        } catch (const DomainError& ex) {
            row.closed_form_error = ex.what();
        }
        if (row.closed_form) {
            if (const auto e = row.closed_form->energy(row.closed_form->rule)) {
                const OdeMode mode = scheme.is_r2() ? OdeMode::SchemeR2 : OdeMode::SchemeR1;
                row.oracle = run_oracle(p, s, mode, scheme.shift(), *e, options);
                if (!reference)
                    reference = e;
            }
        }
        report.rows.push_back(std::move(row));
    }
    if (reference)
        report.exact = run_oracle(p, s, OdeMode::ExactCentrifugal, d0, *reference, options);
    else
        report.exact.error = "no closed-form energy to anchor the search";
    return report;
}

} // namespace hd::cli
