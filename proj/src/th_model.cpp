#include "thspec/th_model.hpp"

#include "thspec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace thspec {

namespace {

constexpr int kScanPoints = 512;
constexpr int kBisectionSteps = 60;
constexpr double kDomainOffset = 1e-6;  // angstrom
constexpr double kTailLengths = 25.0;   // r_hi = r_e + 25 / b_h

std::string fmt(double v)
{
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

double morse_beta(const MoleculeParams& m) { return m.beta.value_or(m.b_h / (1.0 - m.c_h)); }

EnergyLevel make_level(int n, const MoleculeParams& m, double energy)
{
    EnergyLevel level;
    level.n = n;
    level.energy = energy;
    level.energy_minus_depth = energy - m.depth;
    const double k = m.two_mu_over_hbar2();
    level.t = std::sqrt(std::max(0.0, k * (m.depth - energy))) / m.b_h;
    return level;
}

double residual_at(int n, const MoleculeParams& m, double energy)
{
    return energy_residual(n, derive_coefficients(nu_base_for_th(m, energy)));
}

} // namespace

SingularityError::SingularityError(double pole, const std::string& what)
    : std::domain_error(what + " (pole at r = " + fmt(pole) + " angstrom)"), pole_(pole)
{
}

NoBoundLevel::NoBoundLevel(std::string molecule, int n, const std::string& detail)
    : std::runtime_error(molecule + ": no bound level n = " + std::to_string(n) + ": " + detail), n_(n)
{
}

std::optional<double> pole_radius(const MoleculeParams& m)
{
    if (m.c_h > 0.0 && m.c_h < 1.0)
        return m.r_e + std::log(m.c_h) / m.b_h;
    return std::nullopt;
}

double th_potential(double r, const MoleculeParams& m)
{
    if (!(r > 0.0))
        throw DomainError("th_potential: r must be > 0");
    const double y = std::exp(-m.b_h * (r - m.r_e));
    const double denom = 1.0 - m.c_h * y;
    if (std::abs(denom) <= 1e-14) {
        const auto pole = pole_radius(m);
        throw SingularityError(pole.value_or(r), "th_potential evaluated at the pole");
    }
    const double ratio = (1.0 - y) / denom;
    return m.depth * ratio * ratio;
}

double DimensionlessProblem::s(double r) const { return std::exp(-alpha * x(r)); }

DimensionlessProblem dimensionless_problem(const MoleculeParams& m, double energy)
{
    const double k = m.two_mu_over_hbar2();
    DimensionlessProblem p;
    p.d = k * m.depth;
    p.eps = k * energy;
    p.alpha = m.b_h * m.r_e;
    p.c_h = m.c_h;
    p.r_e = m.r_e;
    return p;
}

NUBase nu_base_for_th(const MoleculeParams& m, double energy)
{
    if (!(energy > 0.0 && energy < m.depth))
        throw DomainError("nu_base_for_th: energy " + fmt(energy) + " eV outside (0, D = " + fmt(m.depth) + ")");
    const auto p = dimensionless_problem(m, energy);
    const double scale = p.r_e * p.r_e / (p.alpha * p.alpha);  // 1 / b_h^2
    const double c = p.c_h;
    NUBase base;
    base.alpha1 = 1.0;
    base.alpha2 = c;
    base.alpha3 = c;
    base.xi1 = scale * (p.d - p.eps * c * c);
    base.xi2 = 2.0 * scale * (p.d - p.eps * c);
    base.xi3 = scale * (p.d - p.eps);
    return base;
}

EnergyLevel th_energy(int n, const MoleculeParams& m)
{
    if (n < 0)
        throw DomainError("th_energy: n must be >= 0");
    const double delta = 1e-9 * m.depth;
    const double lo_edge = delta, hi_edge = m.depth - delta;

    double prev_e = lo_edge;
    double prev_r = residual_at(n, m, prev_e);
    for (int i = 1; i < kScanPoints; ++i) {
        const double e = lo_edge + (hi_edge - lo_edge) * i / (kScanPoints - 1);
        const double r = residual_at(n, m, e);
        if (prev_r == 0.0)
            return make_level(n, m, prev_e);
        if ((prev_r < 0.0) != (r < 0.0) || r == 0.0) {
            double lo = prev_e, hi = e, r_lo = prev_r;
            for (int it = 0; it < kBisectionSteps; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi)
                    break;
                const double r_mid = residual_at(n, m, mid);
                if (r_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((r_mid < 0.0) == (r_lo < 0.0)) {
                    lo = mid;
                    r_lo = r_mid;
                } else {
                    hi = mid;
                }
            }
            return make_level(n, m, 0.5 * (lo + hi));
        }
        prev_e = e;
        prev_r = r;
    }
    throw NoBoundLevel(m.name, n, "quantization residual has no sign change in (0, D)");
}

EnergyLevel th_energy_closed(int n, const MoleculeParams& m)
{
    if (n < 0)
        throw DomainError("th_energy_closed: n must be >= 0");
    const double k = m.two_mu_over_hbar2();
    const double c = m.c_h;
    const double scaled_depth = k * m.depth / (m.b_h * m.b_h);  // d / b_h^2
    const double sqrt_a9 = std::sqrt(0.25 * c * c + scaled_depth * (c - 1.0) * (c - 1.0));
    const double q = n * n + n + 0.5;
    const double odd = 2.0 * n + 1.0;
    const double t = -(c * q + odd * sqrt_a9 + 2.0 * scaled_depth * (c - 1.0)) / (odd * c + 2.0 * sqrt_a9);
    if (!(t > 0.0))
        throw NoBoundLevel(m.name, n, "t = " + fmt(t) + " <= 0");
    const double energy = m.depth - t * t * m.b_h * m.b_h / k;
    if (!(energy > 0.0))
        throw NoBoundLevel(m.name, n, "energy below the potential minimum");
    EnergyLevel level = make_level(n, m, energy);
    level.t = t;
    return level;
}

EnergyLevel morse_energy(int n, const MoleculeParams& m)
{
    if (n < 0)
        throw DomainError("morse_energy: n must be >= 0");
    const double b = morse_beta(m);
    const double k = m.two_mu_over_hbar2();
    // E = D - (b^2 hbar^2 / 8 mu) (2n + 1 - sqrt(8 mu D / (b^2 hbar^2)))^2
    const double gap = std::sqrt(4.0 * k * m.depth) / b - (2.0 * n + 1.0);
    if (gap < 0.0)
        throw NoBoundLevel(m.name, n, "above the Morse well capacity");
    const double energy = m.depth - b * b / (4.0 * k) * gap * gap;
    EnergyLevel level = make_level(n, m, energy);
    level.t = 0.5 * gap;
    return level;
}

int th_level_count(const MoleculeParams& m)
{
    int n = 0;
    for (;; ++n) {
        try {
            th_energy_closed(n, m);
        } catch (const NoBoundLevel&) {
            return n;
        }
    }
}

double eq15_as_printed_residual(int n, const MoleculeParams& m, double energy, Eq15Polynomial poly)
{
    if (!(energy > 0.0 && energy <= m.depth))
        throw DomainError("eq15_as_printed_residual: energy outside (0, D]");
    const double c = m.c_h;
    const double scale = m.two_mu_over_hbar2() / (m.b_h * m.b_h);  // 2 mu / (b_h^2 hbar^2)
    const double root9 = std::sqrt(0.25 * c * c + scale * m.depth * (c - 1.0) * (c - 1.0));
    const double gap = scale * (m.depth - energy);
    const double npoly = poly == Eq15Polynomial::as_printed ? n * n + 3.0 * n + 0.5 : n * n + n + 0.5;
    return (2.0 * n + 1.0) * (root9 + c * std::sqrt(gap)) + scale * m.depth * (c - 1.0) + 2.0 * root9 * gap +
           c * npoly;
}

ValidityDomain validity_domain(const MoleculeParams& m)
{
    ValidityDomain dom;
    dom.r_lo = kDomainOffset;
    if (auto pole = pole_radius(m))
        dom.r_lo = std::max(kDomainOffset, *pole + kDomainOffset);
    dom.r_hi = m.r_e + kTailLengths / m.b_h;
    return dom;
}

double RadialWavefunction::operator()(double r) const
{
    const double s = std::exp(-b_h * (r - r_e));
    auto v = evaluate_log(form, level.n, s);
    if (v.sign == 0)
        return 0.0;
    return v.sign * std::exp(v.log_abs + log_norm);
}

RadialWavefunction radial_wavefunction(int n, const MoleculeParams& m)
{
    RadialWavefunction wf;
    wf.level = th_energy(n, m);
    wf.form = wavefunction_form(derive_coefficients(nu_base_for_th(m, wf.level.energy)), Branch::first);
    wf.domain = validity_domain(m);
    wf.b_h = m.b_h;
    wf.r_e = m.r_e;

    const auto rule = gauss_legendre(kQuadratureOrder);
    auto log_psi = [&](double r) { return evaluate_log(wf.form, n, std::exp(-m.b_h * (r - m.r_e))); };

    // Reference scale: largest |psi| over the quadrature nodes.
    double log_ref = -std::numeric_limits<double>::infinity();
    const double width = (wf.domain.r_hi - wf.domain.r_lo) / kQuadraturePanels;
    for (int p = 0; p < kQuadraturePanels; ++p)
        for (double node : rule.nodes) {
            const auto v = log_psi(wf.domain.r_lo + (p + 0.5 * (1.0 + node)) * width);
            if (v.sign != 0)
                log_ref = std::max(log_ref, v.log_abs);
        }
    if (!std::isfinite(log_ref))
        throw NumericalError(m.name + ": wavefunction vanishes on the quadrature grid");

    auto density = [&](double r) {
        const auto v = log_psi(r);
        return v.sign == 0 ? 0.0 : std::exp(2.0 * (v.log_abs - log_ref));
    };
    const double integral = integrate_composite(density, wf.domain.r_lo, wf.domain.r_hi, kQuadraturePanels, rule);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw NumericalError(m.name + ": normalization integral is " + fmt(integral));
    wf.log_norm = -log_ref - 0.5 * std::log(integral);
    wf.norm = std::exp(wf.log_norm);

    const double check = norm_integral(wf, 2 * kQuadraturePanels);
    if (std::abs(check - 1.0) > 1e-9) {
        std::ostringstream ss;
        ss.precision(15);
        ss << m.name << ": normalization did not converge for n = " << n << " (64 panels: 1, 128 panels: " << check
           << ")";
        throw NumericalError(ss.str());
    }
    return wf;
}

double norm_integral(const RadialWavefunction& wf, int panels)
{
    const auto rule = gauss_legendre(kQuadratureOrder);
    return integrate_composite(
        [&](double r) {
            const double v = wf(r);
            return v * v;
        },
        wf.domain.r_lo, wf.domain.r_hi, panels, rule);
}

int count_nodes(const RadialWavefunction& wf, int samples)
{
    int nodes = 0;
    int last_sign = 0;
    for (int i = 0; i < samples; ++i) {
        const double r = wf.domain.r_lo + (wf.domain.r_hi - wf.domain.r_lo) * i / (samples - 1);
        const double s = std::exp(-wf.b_h * (r - wf.r_e));
        const int sign = evaluate_log(wf.form, wf.level.n, s).sign;
        if (sign == 0)
            continue;
        if (last_sign != 0 && sign != last_sign)
            ++nodes;
        last_sign = sign;
    }
    return nodes;
}

} // namespace thspec
