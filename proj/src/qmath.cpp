#include "qspectra/qmath.hpp"

#include <cmath>
#include <string>

namespace qspectra::qmath {

namespace {

constexpr double kPoleCutoff = 1e-300;

// sinh_q / cosh_q with e^|x| factored out:
//   x >= 0: f = e^x (1 -/+ q e^-2x) / 2
//   x <  0: f = e^-x (e^2x -/+ q) / 2
double sinh_cosh_q(bool is_sinh, double x, double q) {
    const double s = is_sinh ? -1.0 : 1.0;
    if (x >= 0.0) {
        return 0.5 * std::exp(x) * (1.0 + s * q * std::exp(-2.0 * x));
    }
    return 0.5 * std::exp(-x) * (std::exp(2.0 * x) + s * q);
}

// Scaled numerator/denominator pair for tanh_q (common factor e^|x|/2 removed).
void tanh_q_parts(double x, double q, double& num, double& den) {
    if (x >= 0.0) {
        const double e = std::exp(-2.0 * x);
        num = 1.0 - q * e;
        den = 1.0 + q * e;
    } else {
        const double e = std::exp(2.0 * x);
        num = e - q;
        den = e + q;
    }
}

} // namespace

double deformed_hyperbolic(DeformedKind kind, double x, double q) {
    if (q == 0.0) throw DomainError("deformed_hyperbolic: q must be nonzero");
    switch (kind) {
        case DeformedKind::SinhQ:
            return sinh_cosh_q(true, x, q);
        case DeformedKind::CoshQ:
            return sinh_cosh_q(false, x, q);
        case DeformedKind::TanhQ: {
            double num, den;
            tanh_q_parts(x, q, num, den);
            if (std::abs(sinh_cosh_q(false, x, q)) < kPoleCutoff)
                throw PoleError("tanh_q: cosh_q vanishes at x=" + std::to_string(x));
            return num / den;
        }
        case DeformedKind::CothQ: {
            double num, den;
            tanh_q_parts(x, q, num, den);
            if (std::abs(sinh_cosh_q(true, x, q)) < kPoleCutoff)
                throw PoleError("coth_q: sinh_q vanishes at x=" + std::to_string(x));
            return den / num;
        }
    }
    throw ParameterError("deformed_hyperbolic: bad kind");
}

double inner_boundary(const PotentialParams& params) {
    if (params.regime() == Regime::Deep)
        return std::log(std::abs(params.q)) / (2.0 * params.alpha);
    return 0.0;
}

double potential_value(const PotentialParams& params, double r) {
    params.validate();
    const double r0 = inner_boundary(params);
    if (!(r > r0)) {
        // the wall itself is outside the domain (the potential diverges there)
        throw DomainError("potential_value: r must exceed the inner boundary");
    }
    const double x = params.alpha * r;
    if (params.q < 0.0) {
        // q < 0 (both Deep and ShallowNegative): rewritten Manning-Rosen form
        const double aq = std::abs(params.q);
        const double sh = sinh_cosh_q(true, x, aq);
        double num, den;
        tanh_q_parts(x, aq, num, den);
        if (std::abs(sh) < kPoleCutoff)
            throw DomainError("potential_value: at the sinh_|q| zero");
        // coth_|q| = den_scaled / num_scaled of tanh_|q|
        return -params.V1 / (sh * sh) - params.V2 * (den / num);
    }
    const double ch = sinh_cosh_q(false, x, params.q);
    double num, den;
    tanh_q_parts(x, params.q, num, den);
    return -params.V1 / (ch * ch) - params.V2 * (num / den);
}

double centrifugal(CentrifugalMode mode, int l, const PotentialParams& params, double r) {
    if (l < 0) throw DomainError("centrifugal: l must be >= 0");
    if (l == 0) return 0.0;
    const double ll1 = static_cast<double>(l) * (l + 1);
    if (mode == CentrifugalMode::Exact) {
        if (!(r > 0.0)) throw DomainError("centrifugal: r must be > 0");
        return ll1 / (r * r);
    }
    if (params.regime() != Regime::Deep)
        throw DomainError("centrifugal: Approximate mode requires the Deep regime");
    const double r0 = inner_boundary(params);
    if (!(r > r0)) throw DomainError("centrifugal: r must exceed the inner boundary");
    const double aq = std::abs(params.q);
    const double sh = sinh_cosh_q(true, params.alpha * r, aq);
    const double a2 = params.alpha * params.alpha;
    return ll1 * a2 * (1.0 / 3.0 + aq / (sh * sh));
}

} // namespace qspectra::qmath
