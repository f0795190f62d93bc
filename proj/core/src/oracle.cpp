#include "hd/oracle.hpp"

#include "hd/approx.hpp"
#include "hd/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace hd {

std::string to_string(OdeMode mode)
{
    switch (mode) {
    case OdeMode::ExactCentrifugal: return "exact";
    case OdeMode::SchemeR2: return "r2";
    case OdeMode::SchemeR1: return "r1";
    }
    return "?";
}

double OdeSpec::q(double r, double e) const
{
    return orbital(r) + coupling(e) * inv_expm1(delta * r) + asymptote(e);
}

double OdeSpec::small_r_power() const
{
    return 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * std::max(0.0, centrifugal)));
}

double OdeSpec::decay_rate(double e) const
{
    const double a = asymptote(e);
    return a > 0.0 ? std::sqrt(a) : 0.0;
}

OdeSpec build_ode(const ModelParams& p, const QuantumState& s, OdeMode mode, double d0)
{
    p.validate();
    validate(s);
    const double delta = p.screening;
    const double m = p.mass;
    const double c = p.symmetry_constant;
    const double g = p.strength;
    const int kappa = s.kappa;
    const OrbitalSign sign = orbital_sign(p.symmetry);
    const double cf = centrifugal_factor(kappa, sign);

    OdeSpec spec;
    spec.delta = delta;
    spec.centrifugal = cf;

    switch (mode) {
    case OdeMode::ExactCentrifugal:
        spec.orbital = [cf](double r) { return cf / (r * r); };
        break;
    case OdeMode::SchemeR2:
        spec.orbital = [cf, delta, d0](double r) { return cf * improved_inv_r2(r, delta, d0); };
        break;
    case OdeMode::SchemeR1:
        spec.orbital = [kappa, delta, sign](double r) { return proper_orbital_term(r, delta, kappa, sign); };
        break;
    }

    if (mode == OdeMode::SchemeR1) {
        if (p.symmetry == Symmetry::Spin) {
            const double ms = m - c;
            spec.coupling = [ms, g](double e) { return -2.0 * (e + ms) * g; };
            spec.asymptote = [ms](double e) { return ms * ms - e * e; };
        } else {
            const double mps = m + c;
            spec.coupling = [mps, g](double e) { return -2.0 * (e - mps) * g; };
            spec.asymptote = [mps](double e) { return mps * mps - e * e; };
        }
    } else if (p.symmetry == Symmetry::Spin) {
        // +(M + E - C_s) Sigma(r) with Sigma = -Sigma0 h
        spec.coupling = [m, c, g](double e) { return -(m + e - c) * g; };
        spec.asymptote = [m, c](double e) { return (m - e) * (m + e - c); };
    } else {
        // -(M - E + C_ps) Delta(r) with Delta = -Delta0 h
        spec.coupling = [m, c, g](double e) { return (m - e + c) * g; };
        spec.asymptote = [m, c](double e) { return (m + e) * (m - e + c); };
    }
    return spec;
}

OdeSpec build_nonrel_ode(int l, double m, double v0, double delta, NonrelVariant variant)
{
    if (l < 0 || !(m > 0.0) || !(delta > 0.0))
        throw DomainError("nonrelativistic ODE needs l >= 0, m > 0, delta > 0");
    OdeSpec spec;
    spec.delta = delta;
    spec.centrifugal = static_cast<double>(l) * (l + 1);
    const double ll = spec.centrifugal;
    switch (variant) {
    case NonrelVariant::ImprovedD0:
        spec.orbital = [ll, delta](double r) { return ll * improved_inv_r2(r, delta, 1.0 / 12.0); };
        break;
    case NonrelVariant::Traditional:
        spec.orbital = [ll, delta](double r) { return ll * improved_inv_r2(r, delta, 0.0); };
        break;
    case NonrelVariant::ProperR1:
        spec.orbital = [l, delta](double r) { return proper_orbital_term(r, delta, l, OrbitalSign::Upper); };
        break;
    }
    spec.coupling = [m, v0](double) { return -2.0 * m * v0; };
    spec.asymptote = [m](double e) { return -2.0 * m * e; };
    return spec;
}

int node_count(std::span<const double> values)
{
    double peak = 0.0;
    for (double v : values)
        peak = std::max(peak, std::abs(v));
    const double floor = 1e-12 * peak;
    int nodes = 0;
    int last = 0;
    for (double v : values) {
        if (std::abs(v) <= floor)
            continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last != 0 && sign != last)
            ++nodes;
        last = sign;
    }
    return nodes;
}

namespace {

// Radial mesh with the E-independent parts of q tabulated at nodes and midpoints.
struct Mesh {
    std::vector<double> r;
    std::vector<double> orb, hul;         // at nodes
    std::vector<double> orb_mid, hul_mid; // at midpoints of each step
};

Mesh make_mesh(const OdeSpec& spec, double r_start, double r_max, double h, double r_grade)
{
    Mesh m;
    double r = r_start;
    m.r.push_back(r);
    while (r < r_max) {
        const double step = h * std::min(1.0, r / r_grade);
        r = std::min(r + step, r_max);
        m.r.push_back(r);
        if (r >= r_max)
            break;
    }
    const std::size_t k = m.r.size();
    m.orb.resize(k);
    m.hul.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        m.orb[i] = spec.orbital(m.r[i]);
        m.hul[i] = inv_expm1(spec.delta * m.r[i]);
    }
    m.orb_mid.resize(k - 1);
    m.hul_mid.resize(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        const double rm = 0.5 * (m.r[i] + m.r[i + 1]);
        m.orb_mid[i] = spec.orbital(rm);
        m.hul_mid[i] = inv_expm1(spec.delta * rm);
    }
    return m;
}

struct Sweep {
    double y = 0.0;
    double dy = 0.0;
    int nodes = 0;
};

constexpr double rescale_limit = 1e120;

void rk4_step(double& y, double& dy, double h, double q0, double qm, double q1)
{
    const double k1y = dy;
    const double k1d = q0 * y;
    const double k2y = dy + 0.5 * h * k1d;
    const double k2d = qm * (y + 0.5 * h * k1y);
    const double k3y = dy + 0.5 * h * k2d;
    const double k3d = qm * (y + 0.5 * h * k2y);
    const double k4y = dy + h * k3d;
    const double k4d = q1 * (y + h * k3y);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    dy += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
}

class Shooter {
public:
    Shooter(const OdeSpec& spec, Mesh mesh, std::size_t match)
        : spec_(spec), mesh_(std::move(mesh)), match_(match)
    {
    }

    Sweep outward(double e) const
    {
        const double c = spec_.coupling(e);
        const double a = spec_.asymptote(e);
        const double r0 = mesh_.r[0];
        const double power = spec_.small_r_power() + 1.0;
        const double q0 = mesh_.orb[0] + c * mesh_.hul[0] + a;
        // y = r^{L+1}(1 + b r) with b from the first correction of q r^2
        const double b = (q0 * r0 * r0 - spec_.centrifugal) / (2.0 * power * r0);
        Sweep s{1.0, power / r0 + b / (1.0 + b * r0), 0};
        for (std::size_t i = 0; i < match_; ++i) {
            const double h = mesh_.r[i + 1] - mesh_.r[i];
            const double prev = s.y;
            rk4_step(s.y, s.dy, h, mesh_.orb[i] + c * mesh_.hul[i] + a,
                     mesh_.orb_mid[i] + c * mesh_.hul_mid[i] + a,
                     mesh_.orb[i + 1] + c * mesh_.hul[i + 1] + a);
            if (prev * s.y < 0.0)
                ++s.nodes;
            renormalize(s);
        }
        return s;
    }

    Sweep inward(double e) const
    {
        const double c = spec_.coupling(e);
        const double a = spec_.asymptote(e);
        const std::size_t last = mesh_.r.size() - 1;
        const double q_end = mesh_.orb[last] + c * mesh_.hul[last] + a;
        Sweep s{1.0, -std::sqrt(std::max(q_end, 0.0)), 0};
        for (std::size_t i = last; i > match_; --i) {
            const double h = mesh_.r[i - 1] - mesh_.r[i];
            const double prev = s.y;
            rk4_step(s.y, s.dy, h, mesh_.orb[i] + c * mesh_.hul[i] + a,
                     mesh_.orb_mid[i - 1] + c * mesh_.hul_mid[i - 1] + a,
                     mesh_.orb[i - 1] + c * mesh_.hul[i - 1] + a);
            if (prev * s.y < 0.0)
                ++s.nodes;
            renormalize(s);
        }
        return s;
    }

    // sin of the Pruefer-angle difference at the matching point: continuous in E,
    // bounded, and zero exactly when the two solutions are proportional.
    double defect(double e, int* nodes = nullptr) const
    {
        const Sweep o = outward(e);
        const Sweep i = inward(e);
        const double s = scale_;
        const double no = std::hypot(o.y, o.dy / s);
        const double ni = std::hypot(i.y, i.dy / s);
        if (nodes)
            *nodes = o.nodes + i.nodes;
        const double d = (o.dy * i.y - i.dy * o.y) / (s * no * ni);
        if (!std::isfinite(d))
            throw IntegrationError("non-finite matching defect at E = " + std::to_string(e));
        return d;
    }

    void set_scale(double s) { scale_ = s; }
    double r_match() const { return mesh_.r[match_]; }
    double r_max() const { return mesh_.r.back(); }

private:
    static void renormalize(Sweep& s)
    {
        const double m = std::abs(s.y) + std::abs(s.dy);
        if (m > rescale_limit) {
            s.y /= m;
            s.dy /= m;
        }
        if (!std::isfinite(s.y) || !std::isfinite(s.dy))
            throw IntegrationError("integration overflow");
    }

    const OdeSpec& spec_;
    Mesh mesh_;
    std::size_t match_;
    double scale_ = 1.0;
};

} // namespace

ShootResult shoot_eigenvalue(const OdeSpec& spec, int target_nodes, double e_lo, double e_hi,
                             const ShootOptions& options)
{
    if (!(e_lo < e_hi))
        throw DomainError("shooting bracket must satisfy e_lo < e_hi");
    if (target_nodes < 0)
        throw DomainError("target node count must be nonnegative");
    // Bound states need q(infinity, E) > 0; clip the bracket to that side of the threshold.
    {
        const double mid = 0.5 * (e_lo + e_hi);
        if (!(spec.asymptote(mid) > 0.0))
            throw NoEigenvalue("bracket midpoint lies in the continuum");
        auto clip = [&](double outer) {
            if (spec.asymptote(outer) > 0.0)
                return outer;
            double in = mid, out = outer;
            for (int i = 0; i < 200 && std::abs(out - in) > 1e-15 * std::max(1.0, std::abs(in)); ++i) {
                const double m = 0.5 * (in + out);
                (spec.asymptote(m) > 0.0 ? in : out) = m;
            }
            // keep a margin so the decay length stays finite
            return in + 1e-6 * (mid - in);
        };
        e_lo = clip(e_lo);
        e_hi = clip(e_hi);
    }
    const double delta = spec.delta;
    const double h = options.step > 0.0 ? options.step : std::min(0.01 / delta, 0.01);
    const double e_mid = 0.5 * (e_lo + e_hi);

    // Outermost classical turning point at the bracket midpoint, located on a coarse scan.
    const double scan_end = 60.0 / delta;
    double r_turn = 0.0;
    double r_qmin = options.r_start;
    double q_min = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 6000; ++i) {
        const double r = scan_end * i / 6000.0;
        const double q = spec.q(r, e_mid);
        if (q < 0.0)
            r_turn = r;
        if (q < q_min) {
            q_min = q;
            r_qmin = r;
        }
    }
    const double r_anchor = r_turn > 0.0 ? r_turn : r_qmin;

    double k_min = std::numeric_limits<double>::infinity();
    for (double e : {e_lo, e_mid, e_hi})
        k_min = std::min(k_min, spec.decay_rate(e));
    double r_max = options.r_max_cap;
    if (k_min > 0.0)
        r_max = std::min(options.r_max_cap, r_anchor + std::max(30.0 / k_min, 10.0 / delta));
    r_max = std::max(r_max, 2.0 * r_anchor + 10.0 * h);

    Mesh mesh = make_mesh(spec, options.r_start, r_max, h, options.grading_radius);
    const auto it = std::lower_bound(mesh.r.begin(), mesh.r.end(), r_anchor);
    std::size_t match = static_cast<std::size_t>(it - mesh.r.begin());
    match = std::clamp<std::size_t>(match, 8, mesh.r.size() - 9);
    const double rm = mesh.r[match];
    Shooter shooter(spec, std::move(mesh), match);
    shooter.set_scale(std::max(std::sqrt(std::abs(spec.q(rm, e_mid))), 1.0 / rm));

    // Scan for sign changes; refine intervals whose node total jumps by more than one.
    struct Sample {
        double e;
        double d;
        int nodes;
    };
    std::vector<Sample> samples;
    const int n_scan = std::max(8, options.scan_points);
    for (int i = 0; i <= n_scan; ++i) {
        const double e = e_lo + (e_hi - e_lo) * i / n_scan;
        Sample s{e, 0.0, 0};
        s.d = shooter.defect(e, &s.nodes);
        samples.push_back(s);
    }
    for (int pass = 0; pass < 6; ++pass) {
        std::vector<Sample> refined{samples.front()};
        bool changed = false;
        for (std::size_t i = 1; i < samples.size(); ++i) {
            const bool wide = samples[i].e - samples[i - 1].e > 1e-9 * std::max(1.0, std::abs(samples[i].e));
            if (wide && refined.size() < 8u * static_cast<std::size_t>(n_scan) &&
                std::abs(samples[i].nodes - samples[i - 1].nodes) > 1) {
                for (int j = 1; j < 4; ++j) {
                    Sample s{samples[i - 1].e + (samples[i].e - samples[i - 1].e) * j / 4.0, 0.0, 0};
                    s.d = shooter.defect(s.e, &s.nodes);
                    refined.push_back(s);
                }
                changed = true;
            }
            refined.push_back(samples[i]);
        }
        samples.swap(refined);
        if (!changed)
            break;
    }

    int iterations = static_cast<int>(samples.size());
    std::vector<int> seen;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const Sample a = samples[i - 1];
        const Sample b = samples[i];
        if (a.d * b.d > 0.0 || (a.d == 0.0 && i > 1))
            continue;
        if (target_nodes < std::min(a.nodes, b.nodes) - 1 || target_nodes > std::max(a.nodes, b.nodes) + 1) {
            seen.push_back(a.nodes);
            continue;
        }
        Sample lo = a, hi = b;
        const double tol = options.energy_tol * std::max(1.0, std::abs(a.e));
        while (hi.e - lo.e > tol && lo.d != 0.0 && hi.d != 0.0) {
            Sample m{0.5 * (lo.e + hi.e), 0.0, 0};
            m.d = shooter.defect(m.e, &m.nodes);
            ++iterations;
            if (m.d == 0.0 || (m.d > 0.0) != (lo.d > 0.0))
                hi = m;
            else
                lo = m;
        }
        const double e_star = lo.d == 0.0 ? lo.e : (hi.d == 0.0 ? hi.e : 0.5 * (lo.e + hi.e));
        int nodes = 0;
        const double d_star = shooter.defect(e_star, &nodes);
        seen.push_back(nodes);
        if (nodes != target_nodes)
            continue;

        ShootResult out;
        out.energy = e_star;
        out.node_count = nodes;
        out.match_defect = std::abs(d_star);
        out.iterations = iterations;
        out.r_match = shooter.r_match();
        out.r_max = shooter.r_max();
        // defect must vary monotonically across the scan interval that held the root
        double prev = a.d;
        bool up = b.d > a.d;
        out.defect_monotone = true;
        for (int j = 1; j <= 4; ++j) {
            const double d = shooter.defect(a.e + (b.e - a.e) * j / 4.0);
            if ((d > prev) != up && d != prev)
                out.defect_monotone = false;
            prev = d;
        }
        return out;
    }

    std::string found;
    for (int n : seen)
        found += (found.empty() ? "" : ",") + std::to_string(n);
    throw NoEigenvalue("no eigenvalue with " + std::to_string(target_nodes) + " nodes in [" +
                       std::to_string(e_lo) + ", " + std::to_string(e_hi) + "]" +
                       (found.empty() ? std::string(" (no sign change)") : " (found node counts " + found + ")"));
}

} // namespace hd
