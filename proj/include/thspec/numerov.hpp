#pragma once

#include "thspec/molecule.hpp"

namespace thspec {

// Shooting solver for the s-wave radial equation
//   R'' + (2 mu / hbar^2) (E - V(r)) R = 0,   R(r_lo) = R(r_hi) = 0
// on a uniform grid. It evaluates the potential directly and shares no code
// with the NU route, so it serves as an independent check of it.

struct RadialGrid {
    double r_lo = 0.0;
    double r_hi = 0.0;
    int n_points = 0;

    double step() const { return (r_hi - r_lo) / (n_points - 1); }
    double r(int i) const { return r_lo + i * step(); }

    static RadialGrid make(double r_lo, double r_hi, int n_points);
    /// Same interval, step halved.
    RadialGrid refined() const { return make(r_lo, r_hi, 2 * n_points - 1); }
};

inline constexpr int kMinGridPoints = 100;
inline constexpr int kDefaultGridPoints = 20000;

RadialGrid default_grid(const MoleculeParams& m, int n_points = kDefaultGridPoints);

struct ShotResult {
    int node_count = 0;        // bound levels below E (Sturm count of the outward solution)
    double match_defect = 0.0; // log-derivative jump at the outer turning point, 1/angstrom
    int match_index = 0;
};

ShotResult integrate_at_energy(double energy, const MoleculeParams& m, const RadialGrid& grid);

struct OracleEigenvalue {
    int n = 0;
    double energy = 0.0;             // eV
    double residual_mismatch = 0.0;  // match_defect at the converged energy
    double refinement_shift = 0.0;   // E(step/2) - E(step), eV; 0 when not checked
};

inline constexpr double kOracleEnergyTolerance = 1e-10;  // eV
inline constexpr double kRefinementTolerance = 1e-6;     // eV

/// Node-count bisection to isolate level n, then bisection on the matching
/// condition. With check_refinement the search is repeated on the refined
/// grid and the shift recorded. Throws NoBoundLevel if level n is absent.
OracleEigenvalue find_eigenvalue(int n, const MoleculeParams& m, const RadialGrid& grid,
                                 bool check_refinement = true);

} // namespace thspec
