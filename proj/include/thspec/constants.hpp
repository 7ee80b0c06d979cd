#pragma once

#include <stdexcept>
#include <string>

namespace thspec {

// Unit system used throughout: lengths in angstrom, energies in eV, masses
// carried as rest energies (mu c^2) in eV.
struct PhysicalConstants {
    double hbar_c = 1973.29;                    // eV * angstrom
    double ev_per_inverse_cm = 1.239841875e-4;  // eV per cm^-1
    double ev_per_amu_c2 = 931.494028e6;        // eV per amu
    double grams_per_amu = 1.660538782e-24;     // g per amu

    // 2 mu / hbar^2 in eV^-1 angstrom^-2 for a mass given as mu c^2.
    double two_mu_over_hbar2(double mu_c2) const { return 2.0 * mu_c2 / (hbar_c * hbar_c); }

    void validate() const;
};

/// Argument outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

double convert_wavenumber_to_ev(double wavenumber, const PhysicalConstants& pc = {});

/// Mass in units of 1e-23 g to rest energy in eV. Throws DomainError for m <= 0.
double convert_mass_grams_to_ev(double mass_1e23_g, const PhysicalConstants& pc = {});

} // namespace thspec
