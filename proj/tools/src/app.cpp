#include "hd/cli/commands.hpp"
#include "hd/cli/output.hpp"

#include "hd/errors.hpp"
#include "hd/spinor.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hd::cli {

namespace {

const std::vector<std::string> energy_columns = {"state_label", "n",      "kappa",         "l_or_ltilde",
                                                 "delta",       "scheme", "branch",        "energy_fm_inv",
                                                 "valid",       "counting_number", "convention", "genuine"};

std::vector<std::string> with(std::vector<std::string> cols, std::initializer_list<const char*> extra)
{
    for (const char* c : extra)
        cols.emplace_back(c);
    return cols;
}

std::vector<Cell> energy_cells(const QuantumState& s, Symmetry sym, double delta, const SchemeConfig& scheme,
                               const EnergySolution& sol, Branch b, const std::string& convention)
{
    return {cell(spectroscopic_label(s, sym)),
            cell(s.n),
            cell(s.kappa),
            cell(derive_orbital(s, sym)),
            cell(delta),
            cell(to_string(scheme.scheme)),
            cell(to_string(b)),
            cell(sol.energy(b)),
            cell(sol.valid(b)),
            cell(sol.counting_number),
            cell(convention),
            cell(sol.genuine(b))};
}

std::vector<Cell> join(std::vector<Cell> a, std::initializer_list<Cell> b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct Options {
    std::string format = "csv";
    std::string output;
    std::string symmetry = "spin";
    std::string scheme = "r2";
    double d0 = 1.0 / 12.0;
    int n = 0;
    int kappa = 1;
    ModelParams params;
    // table
    std::string table;
    // sweep
    std::string axis;
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    int jobs = 1;
    std::vector<std::string> states;
    // wavefunction
    int points = 401;
};

ModelParams model_params(const Options& o)
{
    ModelParams p = o.params;
    p.symmetry = parse_symmetry(o.symmetry);
    p.validate();
    return p;
}

SchemeConfig scheme_config(const Options& o)
{
    const Scheme s = parse_scheme(o.scheme);
    if (s == Scheme::ImprovedR2)
        return SchemeConfig::improved(o.d0);
    return s == Scheme::ConventionalR2 ? SchemeConfig::conventional() : SchemeConfig::proper_r1();
}

QuantumState single_state(const Options& o)
{
    QuantumState s{o.n, o.kappa};
    validate(s);
    return s;
}

QuantumState parse_state(const std::string& text)
{
    std::istringstream in(text);
    QuantumState s;
    char comma = 0;
    if (!(in >> s.n >> comma >> s.kappa) || comma != ',' || !(in >> std::ws).eof())
        throw DomainError("state '" + text + "' is not of the form N,KAPPA");
    validate(s);
    return s;
}

int cmd_table(const Options& o, const CLI::App& app, std::ostream& out)
{
    const TablePreset& preset = table_preset(parse_table_id(o.table));
    ModelParams p = preset.params;
    if (app.count("--mass"))
        p.mass = o.params.mass;
    if (app.count("--strength"))
        p.strength = o.params.strength;
    if (app.count("--constant"))
        p.symmetry_constant = o.params.symmetry_constant;
    p.validate();
    const std::optional<double> d0 = app.count("--d0") ? std::optional<double>(o.d0) : std::nullopt;

    RecordWriter w(out, parse_format(o.format), with(energy_columns, {"doublet", "reference", "reference_w2"}));
    for (const auto& e : compute_table(preset, p, d0)) {
        const Branch b = e.solution.rule;
        w.row(join(energy_cells(e.row->state, p.symmetry, e.delta, e.scheme, e.solution, b, e.row->convention),
                   {cell(e.row->doublet_label(p.symmetry)), cell(e.reference),
                    e.reference_w2 ? cell(*e.reference_w2) : empty_cell()}));
    }
    return exit_ok;
}

int cmd_energy(const Options& o, std::ostream& out)
{
    const ModelParams p = model_params(o);
    const SchemeConfig scheme = scheme_config(o);
    const QuantumState s = single_state(o);
    const EnergySolution sol = solve_energy(p, s, scheme);
    RecordWriter w(out, parse_format(o.format), with(energy_columns, {"selected"}));
    for (Branch b : {Branch::Plus, Branch::Minus})
        w.row(join(energy_cells(s, p.symmetry, p.screening, scheme, sol, b, "printed"), {cell(b == sol.selected)}));
    return sol.selected == Branch::None ? exit_no_bound_state : exit_ok;
}

int cmd_wavefunction(const Options& o, std::ostream& out)
{
    const ModelParams p = model_params(o);
    const SchemeConfig scheme = scheme_config(o);
    const QuantumState s = single_state(o);
    if (o.points < 2)
        throw DomainError("wavefunction needs at least two output points");
    const EnergySolution sol = solve_energy(p, s, scheme);
    const double e = sol.selected_energy();
    const SpinorSolution spinor = build_spinor(p, s, e, scheme);
    const FirstOrderReport fo = first_order_residual(spinor, p);

    RecordWriter w(out, parse_format(o.format), {"r", "F", "G"});
    w.comment("state_label", cell(spectroscopic_label(s, p.symmetry)));
    w.comment("scheme", cell(to_string(scheme.scheme)));
    w.comment("branch", cell(to_string(sol.selected)));
    w.comment("energy_fm_inv", cell(e));
    w.comment("norm_constant", cell(spinor.norm_constant));
    w.comment("node_count", cell(node_count(spinor.dominant())));
    w.comment("closure_residual", cell(fo.closure.max));
    w.comment("coupled_residual", cell(fo.coupled.max));
    w.comment("grid_points", cell(static_cast<int>(spinor.grid.size())));

    const std::size_t size = spinor.grid.size();
    const std::size_t stride = std::max<std::size_t>(1, (size - 1) / static_cast<std::size_t>(o.points - 1));
    for (std::size_t i = 0; i < size; i += stride)
        w.row({cell(spinor.grid.r[i]), cell(spinor.F[i]), cell(spinor.G[i])});
    if ((size - 1) % stride != 0)
        w.row({cell(spinor.grid.r.back()), cell(spinor.F.back()), cell(spinor.G.back())});
    return exit_ok;
}

int cmd_sweep(const Options& o, std::ostream& out)
{
    const SweepAxis axis = parse_axis(o.axis);
    ModelParams base = o.params;
    base.symmetry = parse_symmetry(o.symmetry);
    const SchemeConfig scheme = scheme_config(o);
    std::vector<QuantumState> states;
    for (const auto& t : o.states)
        states.push_back(parse_state(t));
    if (states.empty())
        states.push_back(single_state(o));

    const auto points = compute_sweep(base, scheme, axis, o.from, o.to, o.steps, states, o.jobs);
    RecordWriter w(out, parse_format(o.format), with(energy_columns, {"axis", "axis_value", "error"}));
    for (const auto& pt : points) {
        ModelParams p = base;
        if (axis == SweepAxis::Delta)
            p.screening = pt.axis_value;
        const std::vector<Cell> tail = {cell(to_string(axis)), cell(pt.axis_value), cell(pt.error)};
        if (!pt.solution) {
            std::vector<Cell> row = {cell(spectroscopic_label(pt.state, p.symmetry)),
                                     cell(pt.state.n),
                                     cell(pt.state.kappa),
                                     cell(derive_orbital(pt.state, p.symmetry)),
                                     cell(p.screening),
                                     cell(to_string(scheme.scheme)),
                                     cell("none"),
                                     cell(std::optional<double>{}),
                                     cell(false),
                                     cell(counting_number_raw(pt.state.n, pt.state.kappa, p.symmetry, scheme.scheme)),
                                     cell("printed"),
                                     cell(false)};
            row.insert(row.end(), tail.begin(), tail.end());
            w.row(row);
            continue;
        }
        for (Branch b : {Branch::Plus, Branch::Minus}) {
            auto row = energy_cells(pt.state, p.symmetry, p.screening, scheme, *pt.solution, b, "printed");
            row.insert(row.end(), tail.begin(), tail.end());
            w.row(row);
        }
    }
    return exit_ok;
}

Cell optional_energy(const OracleOutcome& o)
{
    return o.result ? cell(o.result->energy) : empty_cell();
}

int cmd_compare(const Options& o, std::ostream& out)
{
    const ModelParams p = model_params(o);
    const QuantumState s = single_state(o);
    const CompareReport report = compute_compare(p, s, o.d0);

    RecordWriter w(out, parse_format(o.format),
                   with(energy_columns, {"oracle_fm_inv", "oracle_discrepancy", "exact_oracle_fm_inv",
                                         "exact_discrepancy", "note"}));
    bool failed = !report.exact.result;
    for (const auto& row : report.rows) {
        if (!row.closed_form) {
            w.row({cell(spectroscopic_label(s, p.symmetry)), cell(s.n), cell(s.kappa),
                   cell(derive_orbital(s, p.symmetry)), cell(p.screening), cell(to_string(row.scheme.scheme)),
                   cell("none"), cell(std::optional<double>{}), cell(false), empty_cell(), cell("printed"),
                   cell(false), empty_cell(), empty_cell(), optional_energy(report.exact), empty_cell(),
                   cell(row.closed_form_error)});
            continue;
        }
        const EnergySolution& sol = *row.closed_form;
        const Branch b = sol.rule;
        const auto e = sol.energy(b);
        std::string note = row.oracle.error;
        if (!report.exact.result)
            note += (note.empty() ? "" : "; ") + std::string("exact: ") + report.exact.error;
        if (e && sol.genuine(b) && !row.oracle.result)
            failed = true;
        const Cell d_oracle = e && row.oracle.result ? cell(*e - row.oracle.result->energy) : empty_cell();
        const Cell d_exact = e && report.exact.result ? cell(*e - report.exact.result->energy) : empty_cell();
        w.row(join(energy_cells(s, p.symmetry, p.screening, row.scheme, sol, b, "printed"),
                   {optional_energy(row.oracle), d_oracle, optional_energy(report.exact), d_exact, cell(note)}));
    }
    return failed ? exit_oracle_failure : exit_ok;
}

void add_model_options(CLI::App& app, Options& o)
{
    app.add_option("--symmetry", o.symmetry, "spin or pseudospin")->check(CLI::IsMember({"spin", "pseudospin"}));
    app.add_option("--scheme", o.scheme, "r2, r2-conventional or r1")
        ->check(CLI::IsMember({"r2", "r2-conventional", "r1"}));
    app.add_option("--d0", o.d0, "shift of the improved r^-2 substitute");
    app.add_option("--n", o.n, "radial quantum number");
    app.add_option("--kappa", o.kappa, "spin-orbit quantum number");
    app.add_option("--mass", o.params.mass, "M in fm^-1");
    app.add_option("--delta", o.params.screening, "screening parameter in fm^-1");
    app.add_option("--strength", o.params.strength, "potential strength in fm^-1");
    app.add_option("--constant", o.params.symmetry_constant, "C_s or C_ps in fm^-1");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Dirac bound states in a Hulthen potential under spin and pseudospin symmetry", "hd"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file; command-line flags take precedence");
    app.add_option("--format", o.format, "csv or json (one object per line)")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", o.output, "write to this file instead of stdout");
    add_model_options(app, o);

    auto* table = app.add_subcommand("table", "reproduce a published table");
    table->add_option("preset", o.table, "t1, t2, t4 or t5")->required()->check(CLI::IsMember({"t1", "t2", "t4", "t5"}));
    auto* energy = app.add_subcommand("energy", "closed-form energies of one state");
    auto* wave = app.add_subcommand("wavefunction", "normalized spinor components of one state");
    wave->add_option("--points", o.points, "approximate number of output points")->capture_default_str();
    auto* sweep = app.add_subcommand("sweep", "energies along a parameter axis");
    sweep->add_option("--axis", o.axis, "delta, mass or constant")->required()->check(CLI::IsMember({"delta", "mass", "constant"}));
    sweep->add_option("--from", o.from)->required();
    sweep->add_option("--to", o.to)->required();
    sweep->add_option("--steps", o.steps)->required();
    sweep->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
    sweep->add_option("--state", o.states, "N,KAPPA (repeatable); defaults to --n/--kappa");
    auto* compare = app.add_subcommand("compare", "closed forms against the shooting oracle");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return exit_ok;
        err << "hd: " << e.what() << "\n";
        return exit_invalid_config;
    }

    std::ofstream file;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) {
            err << "hd: cannot open " << o.output << "\n";
            return exit_invalid_config;
        }
    }
    std::ostream& sink = o.output.empty() ? out : file;

    try {
        if (table->parsed())
            return cmd_table(o, app, sink);
        if (energy->parsed())
            return cmd_energy(o, sink);
        if (wave->parsed())
            return cmd_wavefunction(o, sink);
        if (sweep->parsed())
            return cmd_sweep(o, sink);
        if (compare->parsed())
            return cmd_compare(o, sink);
    } catch (const NotBoundState& e) {
        err << "hd: no bound state: " << e.what() << "\n";
        return exit_no_bound_state;
    } catch (const InvalidState& e) {
        err << "hd: no bound state: " << e.what() << "\n";
        return exit_no_bound_state;
    } catch (const DomainError& e) {
        err << "hd: invalid configuration: " << e.what() << "\n";
        return exit_invalid_config;
    } catch (const NoEigenvalue& e) {
        err << "hd: oracle failure: " << e.what() << "\n";
        return exit_oracle_failure;
    } catch (const IntegrationError& e) {
        err << "hd: oracle failure: " << e.what() << "\n";
        return exit_oracle_failure;
    }
    return exit_invalid_config;
}

} // namespace hd::cli
