#ifndef QSPECTRA_SPECTRUM_HPP
#define QSPECTRA_SPECTRUM_HPP

#include "qspectra/types.hpp"

#include <string>
#include <vector>

namespace qspectra::spectrum {

/// Manning-Rosen-side quantities (Deep regime, any l).
struct DeepAux {
    double L_E = 0.0;
    double M1 = 0.0;
    double M2 = 0.0;
    double w_l = 0.0;
    double delta_l = 0.0;
};

/// Transcendental-side quantities (ShallowNegative / Positive, l = 0).
struct TransAux {
    double delta = 0.0;
    double p = 0.0;
    double w = 0.0;
};

/// Regime-specific derived quantities at a trial energy. Inadmissibility
/// (a negative radicand, or w <= 0 outside the Deep regime) is data, not an
/// error; `reason` names the offending radicand.
struct AuxParams {
    Regime regime = Regime::Deep;
    bool admissible = false;
    std::string reason;
    DeepAux deep;
    TransAux trans;
};

/// A maximal admissible energy subinterval of (-M, M), with the names of the
/// radicands whose sign boundaries pin its endpoints.
struct EnergyWindow {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<std::string> constraints_active;
};

enum class SolveMethod { ClosedFormDeep, TranscendentalShallow, TranscendentalPositive, SpecialCase };

inline const char* to_string(SolveMethod m) {
    switch (m) {
        case SolveMethod::ClosedFormDeep: return "closed_form_deep";
        case SolveMethod::TranscendentalShallow: return "transcendental_shallow";
        case SolveMethod::TranscendentalPositive: return "transcendental_positive";
        case SolveMethod::SpecialCase: return "special_case";
    }
    return "?";
}

struct EnergyLevel {
    double E = 0.0;
    int n_r = 0;
    int l = 0;
    double residual = 0.0;
    SolveMethod method = SolveMethod::ClosedFormDeep;
    AuxParams aux;
    bool multi_root = false;
};

struct SpectrumResult {
    std::vector<EnergyLevel> levels;
    std::vector<std::string> warnings;
};

struct SolverOptions {
    int deep_scan_points = 2001;
    int trans_scan_points = 4001;
    double bisect_tol = 1e-12; // in units of M
};

/// Regime-dispatching evaluation of the derived quantities at energy E.
AuxParams aux_parameters(const PotentialParams& params, const ParticleSpec& spec,
                         double E, const QuantumNumbers& qn);

/// Maximal subintervals of (-M, M) on which aux_parameters is admissible,
/// found by analytic sign analysis of the (affine or quadratic) radicands.
std::vector<EnergyWindow> admissible_energy_window(const PotentialParams& params,
                                                   const ParticleSpec& spec,
                                                   const QuantumNumbers& qn);

/// Deep-regime residual of the closed-form energy equation:
/// R(E) = (M^2 - E^2) - [(M+E)^2 V2^2/(alpha^2 D^2) + alpha^2 D^2
///        - alpha^2 l(l+1)/3],  D = n_r + 1/2 + sqrt((l+1/2)^2 - 2(M+E)V1/(alpha^2|q|)).
double energy_residual_deep(const PotentialParams& params, const ParticleSpec& spec,
                            double E, const QuantumNumbers& qn);

/// Unsquared pole condition n_r + delta_l + w_l - (L_E + 1/2). Its zeros are
/// the genuine bound states; energy_residual_deep is its squared consequence
/// and also vanishes on a mirror branch that binds nothing.
double pole_condition_deep(const PotentialParams& params, const ParticleSpec& spec,
                           double E, const QuantumNumbers& qn);

SpectrumResult solve_spectrum_deep(const PotentialParams& params, const ParticleSpec& spec,
                                   int n_r_max, int l_max, const SolverOptions& opts = {});

/// 2F1(delta+w-p, delta+p+w; 2w+1; |q|) — zero at the bound states (-1 < q < 0).
double quantization_residual_shallow(const PotentialParams& params, const ParticleSpec& spec,
                                     double E);

/// 2F1(p+w-delta+1, p+w+delta; 2p+1; q/(1+q)) — zero at the bound states (q > 0).
double quantization_residual_positive(const PotentialParams& params, const ParticleSpec& spec,
                                      double E);

SpectrumResult solve_spectrum_transcendental(const PotentialParams& params,
                                             const ParticleSpec& spec, int count_max,
                                             const SolverOptions& opts = {});

enum class SpecialCaseKind { ManningRosen, RosenMorse, Eckart };

/// |q| = 1 special cases. RosenMorse flips V2 -> -V2 and Eckart V1 -> -V1
/// internally, so callers pass the parameters of the special potential itself.
SpectrumResult special_case_spectrum(SpecialCaseKind kind, const PotentialParams& params,
                                     const ParticleSpec& spec, int n_r_max, int l_max,
                                     const SolverOptions& opts = {});

} // namespace qspectra::spectrum

#endif
