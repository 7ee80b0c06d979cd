#include "thspec/numerov.hpp"

#include "thspec/th_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace thspec {

namespace {

constexpr double kSeed = 1e-30;
constexpr double kRescaleAbove = 1e150;

// Numerov weights f_i = 1 + h^2 Q_i / 12 with Q = k (E - V).
struct Sweep {
    std::vector<double> f;
    int start = 0;  // effective inner wall
    int match = 0;
};

// Deep inside the inner wall |h^2 Q / 12| can exceed 1 and the recurrence
// turns unstable; the solution there is negligible, so the wall R = 0 is
// placed at the first grid point where f stays above this floor.
constexpr double kMinWeight = 0.5;

Sweep prepare(double energy, const MoleculeParams& m, const RadialGrid& g)
{
    const double k = m.two_mu_over_hbar2();
    const double h2 = g.step() * g.step() / 12.0;
    Sweep sw;
    sw.f.resize(g.n_points);
    int last_allowed = -1;
    int first_stable = -1;
    for (int i = 0; i < g.n_points; ++i) {
        const double v = th_potential(g.r(i), m);
        sw.f[i] = 1.0 + h2 * k * (energy - v);
        if (v < energy)
            last_allowed = i;
        if (first_stable < 0 && sw.f[i] >= kMinWeight)
            first_stable = i;
    }
    sw.start = std::clamp(first_stable, 0, g.n_points - 6);
    // Match at the outer classical turning point, kept away from the edges.
    sw.match = std::clamp(last_allowed, sw.start + 2, g.n_points - 4);
    return sw;
}

struct Outward {
    int nodes = 0;
    double at_match = 0.0, after_match = 0.0;
};

Outward shoot_outward(const Sweep& sw)
{
    const int n = static_cast<int>(sw.f.size());
    Outward out;
    double y_prev = 0.0, y = kSeed;  // y_{i-1}, y_i
    for (int i = sw.start + 1; i < n - 1; ++i) {
        if (i == sw.match + 1) {
            out.at_match = y_prev;
            out.after_match = y;
        }
        const double y_next = ((12.0 - 10.0 * sw.f[i]) * y - sw.f[i - 1] * y_prev) / sw.f[i + 1];
        if ((y_next < 0.0 && y > 0.0) || (y_next > 0.0 && y < 0.0))
            ++out.nodes;
        y_prev = y;
        y = y_next;
        if (std::abs(y) > kRescaleAbove) {
            y /= kRescaleAbove;
            y_prev /= kRescaleAbove;
        }
    }
    return out;
}

struct Inward {
    double at_match = 0.0, after_match = 0.0;
};

Inward shoot_inward(const Sweep& sw)
{
    const int n = static_cast<int>(sw.f.size());
    double y_next = 0.0, y = kSeed;  // y at n-2, y_next at n-1
    Inward in;
    for (int i = n - 2; i > sw.match; --i) {
        const double y_prev = ((12.0 - 10.0 * sw.f[i]) * y - sw.f[i + 1] * y_next) / sw.f[i - 1];
        y_next = y;
        y = y_prev;
        if (std::abs(y) > kRescaleAbove) {
            y /= kRescaleAbove;
            y_next /= kRescaleAbove;
        }
    }
    in.at_match = y;
    in.after_match = y_next;
    return in;
}

// Casoratian of the two sweeps at the match, scale-free; zero exactly when
// the outward and inward solutions are proportional.
double casoratian(const Outward& o, const Inward& in)
{
    const double c = o.at_match * in.after_match - o.after_match * in.at_match;
    const double scale = (std::abs(o.at_match) + std::abs(o.after_match)) *
                         (std::abs(in.at_match) + std::abs(in.after_match));
    return c / scale;
}

double log_derivative_jump(const Outward& o, const Inward& in, double h)
{
    return (in.after_match / in.at_match - o.after_match / o.at_match) / h;
}

} // namespace

RadialGrid RadialGrid::make(double r_lo, double r_hi, int n_points)
{
    if (!(r_lo < r_hi))
        throw DomainError("RadialGrid: r_lo must be < r_hi");
    if (n_points < kMinGridPoints)
        throw DomainError("RadialGrid: need at least " + std::to_string(kMinGridPoints) + " points");
    return RadialGrid{r_lo, r_hi, n_points};
}

RadialGrid default_grid(const MoleculeParams& m, int n_points)
{
    const auto dom = validity_domain(m);
    return RadialGrid::make(dom.r_lo, dom.r_hi, n_points);
}

ShotResult integrate_at_energy(double energy, const MoleculeParams& m, const RadialGrid& grid)
{
    if (!(energy > 0.0 && energy < m.depth))
        throw DomainError("integrate_at_energy: energy outside (0, D)");
    if (auto pole = pole_radius(m); pole && *pole >= grid.r_lo && *pole <= grid.r_hi)
        throw SingularityError(*pole, "radial grid contains the potential pole");
    const auto sw = prepare(energy, m, grid);
    const auto out = shoot_outward(sw);
    const auto in = shoot_inward(sw);
    return ShotResult{out.nodes, log_derivative_jump(out, in, grid.step()), sw.match};
}

namespace {

struct Probe {
    int nodes;
    double casoratian;
    double defect;
};

Probe probe(double energy, const MoleculeParams& m, const RadialGrid& g)
{
    const auto sw = prepare(energy, m, g);
    const auto out = shoot_outward(sw);
    const auto in = shoot_inward(sw);
    return Probe{out.nodes, casoratian(out, in), log_derivative_jump(out, in, g.step())};
}

OracleEigenvalue solve_on_grid(int n, const MoleculeParams& m, const RadialGrid& g)
{
    if (n < 0)
        throw DomainError("find_eigenvalue: n must be >= 0");
    if (auto pole = pole_radius(m); pole && *pole >= g.r_lo && *pole <= g.r_hi)
        throw SingularityError(*pole, "radial grid contains the potential pole");

    double lo = 1e-12 * m.depth;
    double hi = m.depth * (1.0 - 1e-12);
    Probe p_lo = probe(lo, m, g);
    Probe p_hi = probe(hi, m, g);
    if (p_lo.nodes > n)
        throw NoBoundLevel(m.name, n, "level lies below the search window");
    if (p_hi.nodes <= n)
        throw NoBoundLevel(m.name, n, "only " + std::to_string(p_hi.nodes) + " levels below D on this grid");

    // Isolate level n: nodes(lo) == n and nodes(hi) == n + 1.
    while (p_lo.nodes != n || p_hi.nodes != n + 1) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const Probe p = probe(mid, m, g);
        if (p.nodes <= n) {
            lo = mid;
            p_lo = p;
        } else {
            hi = mid;
            p_hi = p;
        }
    }

    // Matching condition changes sign exactly once inside the bracket.
    double c_lo = p_lo.casoratian;
    while (hi - lo > kOracleEnergyTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const Probe p = probe(mid, m, g);
        if (p.casoratian == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((p.casoratian < 0.0) == (c_lo < 0.0)) {
            lo = mid;
            c_lo = p.casoratian;
        } else {
            hi = mid;
        }
    }
    const double energy = 0.5 * (lo + hi);
    OracleEigenvalue ev;
    ev.n = n;
    ev.energy = energy;
    ev.residual_mismatch = probe(energy, m, g).defect;
    return ev;
}

} // namespace

OracleEigenvalue find_eigenvalue(int n, const MoleculeParams& m, const RadialGrid& grid, bool check_refinement)
{
    OracleEigenvalue ev = solve_on_grid(n, m, grid);
    if (check_refinement)
        ev.refinement_shift = solve_on_grid(n, m, grid.refined()).energy - ev.energy;
    return ev;
}

} // namespace thspec
