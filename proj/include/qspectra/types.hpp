#ifndef QSPECTRA_TYPES_HPP
#define QSPECTRA_TYPES_HPP

#include "qspectra/errors.hpp"

namespace qspectra {

/// Deformation regime, fixed by q alone. Boundaries are inclusive as stated:
/// q <= -1 is Deep, -1 < q < 0 is ShallowNegative, q > 0 is Positive.
enum class Regime { Deep, ShallowNegative, Positive };

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::Deep: return "deep";
        case Regime::ShallowNegative: return "shallow_negative";
        case Regime::Positive: return "positive";
    }
    return "?";
}

/// The four potential parameters of V_q(r) = S_q(r) = -V1/cosh_q^2(ar) - V2 tanh_q(ar).
/// Natural units (hbar = c = 1): V1, V2 are energies, alpha an inverse length,
/// q the dimensionless deformation.
struct PotentialParams {
    double V1 = 0.0;
    double V2 = 0.0;
    double alpha = 1.0;
    double q = 1.0;

    void validate() const {
        if (!(alpha > 0.0)) throw DomainError("alpha must be > 0");
        if (q == 0.0) throw DomainError("q must be nonzero");
    }

    Regime regime() const {
        validate();
        if (q <= -1.0) return Regime::Deep;
        if (q < 0.0) return Regime::ShallowNegative;
        return Regime::Positive;
    }
};

/// Spinless particle of mass M (> 0).
struct ParticleSpec {
    double M = 1.0;

    void validate() const {
        if (!(M > 0.0)) throw DomainError("M must be > 0");
    }
};

/// Radial and orbital indices. l = 0 is required outside the Deep regime.
struct QuantumNumbers {
    int n_r = 0;
    int l = 0;
};

} // namespace qspectra

#endif
