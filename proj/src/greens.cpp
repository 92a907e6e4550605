#include "qspectra/greens.hpp"

#include "qspectra/specfun.hpp"
#include "qspectra/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qspectra::greens {

namespace {

constexpr double kGammaPoleTol = 1e-9;
constexpr double kQuantizationTol = 1e-12;

struct GreensCore {
    double value = 0.0;
    double prefactor_log = 0.0; // ln|Gamma ratio|
    double hyp_product = 0.0;   // product of the two 2F1 factors
};

// Shared assembly: value = sign * exp(prefactor_log + exponent_log) * F1 * F2.
GreensCore assemble(double M1, double M2, double L_E, double exponent_log, double f_gt,
                    double f_lt) {
    const double pole_arg = M1 - L_E;
    if (std::abs(pole_arg - std::round(pole_arg)) < kGammaPoleTol &&
        std::round(pole_arg) <= 0.0)
        throw PoleError("greens: Gamma(M1 - L_E) pole at M1 - L_E = " +
                        std::to_string(pole_arg));

    int s1 = 1, s2 = 1, s3 = 1, s4 = 1;
    const double lg = specfun::log_gamma_signed(pole_arg, s1) +
                      specfun::log_gamma_signed(L_E + M1 + 1.0, s2) -
                      specfun::log_gamma_signed(M1 + M2 + 1.0, s3) -
                      specfun::log_gamma_signed(M1 - M2 + 1.0, s4);
    const int sign = s1 * s2 * s3 * s4;

    GreensCore core;
    core.prefactor_log = lg;
    core.hyp_product = f_gt * f_lt;
    core.value = sign * std::exp(lg + exponent_log) * core.hyp_product;
    return core;
}

// Manning-Rosen variables: zeta(x) = e^{-2x} decreasing in x;
// recessive-at-infinity channel at x_> (c = M1-M2+1, argument zeta),
// regular-at-wall channel at x_< (c = M1+M2+1, argument 1-zeta).
GreensCore mr_core(const spectrum::DeepAux& aux, double x1, double x2) {
    const double x_lt = std::min(x1, x2);
    const double x_gt = std::max(x1, x2);
    const double z_gt = std::exp(-2.0 * x_gt);
    const double z_lt = std::exp(-2.0 * x_lt);

    const double a = aux.M1 - aux.L_E;
    const double b = aux.L_E + aux.M1 + 1.0;
    const double f_gt = specfun::gauss_2f1(a, b, aux.M1 - aux.M2 + 1.0, z_gt).value;
    const double f_lt = specfun::gauss_2f1(a, b, aux.M1 + aux.M2 + 1.0, 1.0 - z_lt).value;

    const double exponent_log =
        0.5 * (aux.M1 + aux.M2 + 1.0) * (std::log1p(-z_lt) + std::log1p(-z_gt)) +
        0.5 * (aux.M1 - aux.M2) * (std::log(z_lt) + std::log(z_gt));
    return assemble(aux.M1, aux.M2, aux.L_E, exponent_log, f_gt, f_lt);
}

// Rosen-Morse variables: z(x) = (1+tanh x)/2 increasing in x;
// recessive-at-+infinity channel at x_> (c = M1+M2+1, argument 1-z),
// recessive-at--infinity channel at x_< (c = M1-M2+1, argument z).
GreensCore rm_core(double p, double w, double delta, double x1, double x2) {
    const double M1 = p + w;
    const double M2 = p - w;
    const double L_E = delta - 1.0;
    const double x_lt = std::min(x1, x2);
    const double x_gt = std::max(x1, x2);
    // z = 1/(1+e^{-2x}), 1-z = e^{-2x}/(1+e^{-2x})
    auto z_of = [](double x) { return 1.0 / (1.0 + std::exp(-2.0 * x)); };
    auto one_mz_of = [](double x) {
        const double e = std::exp(-2.0 * x);
        return e / (1.0 + e);
    };

    const double a = M1 - L_E;
    const double b = L_E + M1 + 1.0;
    const double f_gt = specfun::gauss_2f1(a, b, M1 + M2 + 1.0, one_mz_of(x_gt)).value;
    const double f_lt = specfun::gauss_2f1(a, b, M1 - M2 + 1.0, z_of(x_lt)).value;

    const double exponent_log =
        0.5 * (M1 + M2) * (std::log(one_mz_of(x_lt)) + std::log(one_mz_of(x_gt))) +
        0.5 * (M1 - M2) * (std::log(z_of(x_lt)) + std::log(z_of(x_gt)));
    return assemble(M1, M2, L_E, exponent_log, f_gt, f_lt);
}

GreensCore core_for(const PotentialParams& params, const ParticleSpec& spec, double E, int l,
                    double x1, double x2) {
    const Regime reg = params.regime();
    const spectrum::AuxParams aux =
        spectrum::aux_parameters(params, spec, E, {0, reg == Regime::Deep ? l : 0});
    if (!aux.admissible)
        throw DomainError("greens: E outside the admissible window (" + aux.reason + ")");
    if (reg == Regime::Positive) return rm_core(aux.trans.p, aux.trans.w, aux.trans.delta, x1, x2);
    if (reg == Regime::Deep) return mr_core(aux.deep, x1, x2);
    // ShallowNegative: Manning-Rosen dictionary M1 = delta - 1/2 + w, L_E = p - 1/2
    spectrum::DeepAux d;
    d.M1 = aux.trans.delta - 0.5 + aux.trans.w;
    d.M2 = aux.trans.delta - 0.5 - aux.trans.w;
    d.L_E = aux.trans.p - 0.5;
    return mr_core(d, x1, x2);
}

} // namespace

GreensEvalPoint greens_manning_rosen(const PotentialParams& params, const ParticleSpec& spec,
                                     double E, int l, double x1, double x2) {
    const Regime reg = params.regime();
    if (reg == Regime::Positive)
        throw DomainError("greens_manning_rosen: Deep or ShallowNegative mapping required");
    if (reg == Regime::ShallowNegative && l != 0)
        throw DomainError("greens_manning_rosen: l = 0 required outside the Deep regime");
    if (!(x1 > 0.0) || !(x2 > 0.0))
        throw DomainError("greens_manning_rosen: coordinates must be positive");
    const GreensCore core = core_for(params, spec, E, l, x1, x2);
    return {x1, x2, E, core.value, core.prefactor_log};
}

GreensEvalPoint greens_rosen_morse(const PotentialParams& params, const ParticleSpec& spec,
                                   double E, double x1, double x2) {
    if (params.regime() != Regime::Positive)
        throw DomainError("greens_rosen_morse: Positive regime required");
    const GreensCore core = core_for(params, spec, E, 0, x1, x2);
    return {x1, x2, E, core.value, core.prefactor_log};
}

double wall_coordinate(const PotentialParams& params) {
    const Regime reg = params.regime();
    if (reg == Regime::Deep)
        throw DomainError("wall_coordinate: defined for ShallowNegative and Positive only");
    return -0.5 * std::log(std::abs(params.q));
}

double boundary_hyp_product(const PotentialParams& params, const ParticleSpec& spec, double E) {
    const double x0 = wall_coordinate(params);
    return core_for(params, spec, E, 0, x0, x0).hyp_product;
}

double dirichlet_greens(const PotentialParams& params, const ParticleSpec& spec, double E,
                        double x1, double x2) {
    const double x0 = wall_coordinate(params);
    if (!(x1 > x0) || !(x2 > x0))
        throw DomainError("dirichlet_greens: coordinates must lie beyond the wall");

    const GreensCore g00 = core_for(params, spec, E, 0, x0, x0);
    if (std::abs(g00.hyp_product) < kQuantizationTol)
        throw QuantizationPole("dirichlet_greens: G(x0,x0) vanishes (bound state)", E);

    const GreensCore g12 = core_for(params, spec, E, 0, x1, x2);
    const GreensCore g10 = core_for(params, spec, E, 0, x1, x0);
    const GreensCore g02 = core_for(params, spec, E, 0, x0, x2);
    return g12.value - g10.value * g02.value / g00.value;
}

} // namespace qspectra::greens
