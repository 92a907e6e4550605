#ifndef QSPECTRA_QMATH_HPP
#define QSPECTRA_QMATH_HPP

#include "qspectra/types.hpp"

namespace qspectra::qmath {

enum class DeformedKind { SinhQ, CoshQ, TanhQ, CothQ };

enum class CentrifugalMode { Exact, Approximate };

/// q-deformed hyperbolic functions sinh_q x = (e^x - q e^-x)/2,
/// cosh_q x = (e^x + q e^-x)/2 and their quotients. Overflow-safe for
/// |x| up to ~700 by factoring out e^|x|.
double deformed_hyperbolic(DeformedKind kind, double x, double q);

/// Inner boundary of the radial domain: ln|q|/(2 alpha) in the Deep regime,
/// 0 otherwise (the potential lives on the positive half-line there).
double inner_boundary(const PotentialParams& params);

/// V_q(r) = S_q(r). The Deep regime always evaluates the rewritten
/// sinh/coth form (with |q|); the two forms are algebraically identical for
/// q <= -1 but the rewritten one has no sign cancellation near the wall.
double potential_value(const PotentialParams& params, double r);

/// Centrifugal term l(l+1)/r^2, either exact or in the deformed
/// Pekeris-type approximation alpha^2 l(l+1) (1/3 + |q|/sinh_|q|^2(ar)).
/// The approximation is only defined for the Deep regime.
double centrifugal(CentrifugalMode mode, int l, const PotentialParams& params, double r);

} // namespace qspectra::qmath

#endif
