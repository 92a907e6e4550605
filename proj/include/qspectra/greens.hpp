#ifndef QSPECTRA_GREENS_HPP
#define QSPECTRA_GREENS_HPP

#include "qspectra/types.hpp"

namespace qspectra::greens {

/// One evaluation of a closed-form radial Green's function at dimensionless
/// coordinates (x1, x2). prefactor_log carries ln of the Gamma-ratio
/// magnitude so the overall scale never overflows silently.
struct GreensEvalPoint {
    double x1 = 0.0;
    double x2 = 0.0;
    double E = 0.0;
    double value = 0.0;
    double prefactor_log = 0.0;
};

/// Manning-Rosen Green's function (Deep mapping for any l; ShallowNegative
/// uses l = 0). Coordinates live on the half-line x > 0.
GreensEvalPoint greens_manning_rosen(const PotentialParams& params, const ParticleSpec& spec,
                                     double E, int l, double x1, double x2);

/// Rosen-Morse Green's function (Positive regime, s-wave), full-line x.
GreensEvalPoint greens_rosen_morse(const PotentialParams& params, const ParticleSpec& spec,
                                   double E, double x1, double x2);

/// Wall coordinate of the Dirichlet construction: -ln|q|/2 (ShallowNegative)
/// or -ln(q)/2 (Positive).
double wall_coordinate(const PotentialParams& params);

/// Product of the two hypergeometric factors of G(x0, x0); dimensionless and
/// scale-free, so its zeros are exactly the zeros of G(x0, x0).
double boundary_hyp_product(const PotentialParams& params, const ParticleSpec& spec, double E);

/// Dirichlet-restricted Green's function
///   G(x1,x2) - G(x1,x0) G(x0,x2) / G(x0,x0).
/// Throws QuantizationPole when |G(x0,x0)| vanishes at the working scale —
/// that is a bound state, not a fault.
double dirichlet_greens(const PotentialParams& params, const ParticleSpec& spec, double E,
                        double x1, double x2);

} // namespace qspectra::greens

#endif
