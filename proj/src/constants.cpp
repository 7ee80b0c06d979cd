#include "thspec/constants.hpp"

#include <cmath>

namespace thspec {

void PhysicalConstants::validate() const
{
    auto check = [](double v, const char* name) {
        if (!std::isfinite(v) || v <= 0.0)
            throw DomainError(std::string("physical constant ") + name + " must be finite and positive");
    };
    check(hbar_c, "hbar_c");
    check(ev_per_inverse_cm, "ev_per_inverse_cm");
    check(ev_per_amu_c2, "ev_per_amu_c2");
    check(grams_per_amu, "grams_per_amu");
}

double convert_wavenumber_to_ev(double wavenumber, const PhysicalConstants& pc)
{
    return wavenumber * pc.ev_per_inverse_cm;
}

double convert_mass_grams_to_ev(double mass_1e23_g, const PhysicalConstants& pc)
{
    if (!(mass_1e23_g > 0.0) || !std::isfinite(mass_1e23_g))
        throw DomainError("mass must be positive, got " + std::to_string(mass_1e23_g));
    return mass_1e23_g * 1e-23 / pc.grams_per_amu * pc.ev_per_amu_c2;
}

} // namespace thspec
