#ifndef QSPECTRA_SPECFUN_HPP
#define QSPECTRA_SPECFUN_HPP

#include "qspectra/errors.hpp"

namespace qspectra::specfun {

enum class Hyp2F1Method { DirectSeries, PolynomialSum, LinearTransform };

inline const char* to_string(Hyp2F1Method m) {
    switch (m) {
        case Hyp2F1Method::DirectSeries: return "direct_series";
        case Hyp2F1Method::PolynomialSum: return "polynomial_sum";
        case Hyp2F1Method::LinearTransform: return "linear_transform";
    }
    return "?";
}

struct Hyp2F1Result {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    Hyp2F1Method method = Hyp2F1Method::DirectSeries;
};

/// ln Gamma(x) for x > 0 (Lanczos). Relative error <= 1e-13 on [1e-6, 1e6].
double log_gamma(double x);

/// ln |Gamma(x)| together with the sign of Gamma(x); handles negative
/// non-integer x by reflection. At a pole the log is +infinity.
double log_gamma_signed(double x, int& sign);

/// Gauss hypergeometric 2F1(a, b; c; z) for real parameters and z in [0, 1).
/// Polynomial cases (a or b within 1e-9 of a non-positive integer) are summed
/// exactly; z <= 0.5 uses the direct series; z in (0.5, 1) the z -> 1-z linear
/// transformation, with near-integer c-a-b handled by +/-1e-9 perturbation of
/// c and averaging.
Hyp2F1Result gauss_2f1(double a, double b, double c, double z);

/// Jacobi polynomial P_n^(a,b)(x) by the three-term recurrence.
double jacobi_p(int n, double a, double b, double x);

} // namespace qspectra::specfun

#endif
