#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "thspec/molecule.hpp"
#include "thspec/nu_engine.hpp"

namespace thspec {

// Tietz-Hua potential
//   V(r) = D [(1 - exp(-b_h (r - r_e))) / (1 - c_h exp(-b_h (r - r_e)))]^2
// specialized onto the parametric NU engine through s = exp(-b_h (r - r_e)).

class SingularityError : public std::domain_error {
public:
    SingularityError(double pole, const std::string& what);
    double pole() const noexcept { return pole_; }

private:
    double pole_;
};

class NoBoundLevel : public std::runtime_error {
public:
    NoBoundLevel(std::string molecule, int n, const std::string& detail);
    int level() const noexcept { return n_; }

private:
    int n_;
};

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Radius of the denominator zero r_e + ln(c_h)/b_h; only exists for 0 < c_h < 1.
std::optional<double> pole_radius(const MoleculeParams& m);

double th_potential(double r, const MoleculeParams& m);

struct DimensionlessProblem {
    double d = 0.0;      // 2 mu D / hbar^2, 1/angstrom^2
    double eps = 0.0;    // 2 mu E / hbar^2, 1/angstrom^2
    double alpha = 0.0;  // b_h r_e
    double c_h = 0.0;
    double r_e = 0.0;

    double x(double r) const { return (r - r_e) / r_e; }
    double s(double r) const;
};

DimensionlessProblem dimensionless_problem(const MoleculeParams& m, double energy);

/// NU template coefficients at trial energy E, 0 < E < D.
NUBase nu_base_for_th(const MoleculeParams& m, double energy);

struct EnergyLevel {
    int n = 0;
    double energy = 0.0;            // eV
    double energy_minus_depth = 0.0;  // eV, E - D
    double t = 0.0;                 // sqrt(alpha8) = sqrt(d - eps) / b_h
};

/// Bracketing scan plus bisection on the NU quantization residual.
EnergyLevel th_energy(int n, const MoleculeParams& m);

/// Direct solve of the quantization condition, which is linear in t for
/// the Tietz-Hua coefficients.
EnergyLevel th_energy_closed(int n, const MoleculeParams& m);

/// Morse spectrum with exponent beta, i.e. the c_h = 0 limit.
EnergyLevel morse_energy(int n, const MoleculeParams& m);

/// Number of bound TH levels (n = 0 .. count-1).
int th_level_count(const MoleculeParams& m);

enum class Eq15Polynomial {
    as_printed,  // c_h (n^2 + 3n + 1/2)
    derived,     // c_h (n^2 + n + 1/2), what the general quantization condition yields
};

/// The published closed-form TH energy relation, transcribed term by term
/// (including its other printed features), with a selectable n-polynomial.
/// Diagnostic only; th_energy is authoritative.
double eq15_as_printed_residual(int n, const MoleculeParams& m, double energy, Eq15Polynomial poly);

struct ValidityDomain {
    double r_lo = 0.0;
    double r_hi = 0.0;
};

ValidityDomain validity_domain(const MoleculeParams& m);

struct RadialWavefunction {
    EnergyLevel level;
    WavefunctionForm form;
    double norm = 0.0;      // N_{n,0}; may underflow, log_norm is exact
    double log_norm = 0.0;
    ValidityDomain domain;
    double b_h = 0.0;
    double r_e = 0.0;

    double operator()(double r) const;
};

inline constexpr int kQuadratureOrder = 64;
inline constexpr int kQuadraturePanels = 64;

RadialWavefunction radial_wavefunction(int n, const MoleculeParams& m);

/// Integral of R^2 over the validity domain with the given panel count.
double norm_integral(const RadialWavefunction& wf, int panels = 2 * kQuadraturePanels);

/// Sign changes of R on a uniform grid over the validity domain.
int count_nodes(const RadialWavefunction& wf, int samples = 20000);

} // namespace thspec
