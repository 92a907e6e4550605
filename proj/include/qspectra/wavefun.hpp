#ifndef QSPECTRA_WAVEFUN_HPP
#define QSPECTRA_WAVEFUN_HPP

#include "qspectra/spectrum.hpp"
#include "qspectra/types.hpp"

#include <vector>

namespace qspectra::wavefun {

/// Uniform radial grid; r_min must not undercut the inner boundary.
struct RadialGrid {
    double r_min = 0.0;
    double r_max = 0.0;
    int n_points = 2;
};

struct RadialTable {
    RadialGrid grid;
    std::vector<double> values;
    double norm = 0.0;
    spectrum::EnergyLevel level;
};

/// Deep-regime radial function with the analytic normalization constant,
/// evaluated in log-gamma space. Defined for r >= r0 (0 at the wall).
double wavefunction_deep(const PotentialParams& params, const ParticleSpec& spec,
                         const spectrum::EnergyLevel& level, double r);

/// Un-normalized (C = 1) shallow-regime radial function, r >= 0.
double wavefunction_shallow(const PotentialParams& params, const ParticleSpec& spec,
                            const spectrum::EnergyLevel& level, double r);

/// Un-normalized (C = 1) positive-regime radial function, r >= 0.
double wavefunction_positive(const PotentialParams& params, const ParticleSpec& spec,
                             const spectrum::EnergyLevel& level, double r);

/// Default outer radius: r_inner + max(50/alpha, 10/(alpha w)), capped at
/// r_inner + 1e4/alpha by the tail budget (TailError if the budget fails).
double default_r_max(const PotentialParams& params, const spectrum::EnergyLevel& level);

/// Fixes the normalization constant by 64-point composite Gauss-Legendre
/// quadrature of |u|^2 (tail budget 1e-12) and fills the table on `grid`.
/// Sign convention: u > 0 on the first lobe from the inner boundary.
RadialTable normalize_numeric(const PotentialParams& params, const ParticleSpec& spec,
                              const spectrum::EnergyLevel& level, const RadialGrid& grid);

/// Strict sign changes of the tabulated values, ignoring |u| < 1e-10 max|u|.
int count_nodes(const RadialTable& table);

} // namespace qspectra::wavefun

#endif
