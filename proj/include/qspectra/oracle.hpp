#ifndef QSPECTRA_ORACLE_HPP
#define QSPECTRA_ORACLE_HPP

#include "qspectra/qmath.hpp"
#include "qspectra/types.hpp"

#include <limits>
#include <span>
#include <vector>

namespace qspectra::oracle {

/// Finite-difference configuration. e_min/e_max bound the self-consistency
/// scan in E; callers that know the analytically admissible window pass it
/// here (the oracle itself derives only a core-stability cap from the
/// potential shape, keeping it independent of the closed-form solvers).
struct OracleConfig {
    int n_grid = 4000;
    double r_max_factor = 50.0;
    qmath::CentrifugalMode centrifugal_mode = qmath::CentrifugalMode::Exact;
    bool richardson = true;
    int e_scan_points = 400;
    double e_min = -std::numeric_limits<double>::infinity();
    double e_max = std::numeric_limits<double>::infinity();
    int refine_n_grid = 0; // 0: refine at n_grid; else bisect roots on this finer grid
};

/// Symmetric tridiagonal Dirichlet discretization; dimension = n_grid - 1.
struct TridiagonalOperator {
    std::vector<double> diag;
    std::vector<double> offdiag; // size diag.size() - 1
    double h = 0.0;
};

struct OracleResult {
    double E = 0.0;
    int n_r = 0;
    int l = 0;
    double grid_error_estimate = 0.0;
    bool converged = false;
};

/// 3-point discretization of -1/2 d^2/dr^2 + (E+M) V_q(r) + centrifugal/2 on
/// (r_inner, r_inner + r_max_factor/alpha) with Dirichlet ends.
TridiagonalOperator build_operator(const PotentialParams& params, const ParticleSpec& spec,
                                   double E_trial, int l, const OracleConfig& config);

/// k-th smallest eigenvalue by Sturm-sequence bisection (1e-13 bracket).
double eigenvalue_k(const TridiagonalOperator& op, int k);

/// Eigenvector for a converged eigenvalue, by inverse iteration.
std::vector<double> eigenvector_k(const TridiagonalOperator& op, double lambda);

/// Strict sign changes ignoring entries below rel_eps * max|v|.
int count_sign_changes(std::span<const double> v, double rel_eps);

/// Upper energy cap below which the attractive 1/rho^2 core (if any) stays
/// subcritical for the configured centrifugal mode.
double core_stability_emax(const PotentialParams& params, const ParticleSpec& spec, int l,
                           qmath::CentrifugalMode mode);

/// Self-consistent level: root of g(E) = lambda_{n_r}(E) - (E^2 - M^2)/2,
/// bisected to 1e-10 M, optionally Richardson-extrapolated from h and h/2.
OracleResult oracle_energy(const PotentialParams& params, const ParticleSpec& spec, int n_r,
                           int l, const OracleConfig& config);

/// Closed-form level fed in for comparison (the oracle never computes these).
struct ClosedLevel {
    int n_r = 0;
    int l = 0;
    double E = 0.0;
    double win_lo = 0.0;
    double win_hi = 0.0;
};

struct ApproxErrorRow {
    int n_r = 0;
    int l = 0;
    double E_closed = 0.0;
    double E_approx = 0.0;
    double E_exact = 0.0;
    double dE_model = 0.0; // E_approx - E_closed
    double dE_phys = 0.0;  // E_exact - E_approx
    double h = 0.0;
    bool converged = false;
};

/// For each closed-form level, the same level from the FD oracle in both
/// centrifugal modes: dE_model isolates the solver-vs-model agreement,
/// dE_phys the physical cost of the centrifugal approximation.
std::vector<ApproxErrorRow> approximation_error_report(const PotentialParams& params,
                                                       const ParticleSpec& spec,
                                                       const std::vector<ClosedLevel>& levels,
                                                       const OracleConfig& config);

} // namespace qspectra::oracle

#endif
