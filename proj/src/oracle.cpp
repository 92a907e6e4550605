#include "qspectra/oracle.hpp"

#include "qspectra/log.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace qspectra::oracle {

namespace {

constexpr double kPivMin = 1e-290;

// Number of eigenvalues strictly below x (Sturm count via LDL^T pivots).
int sturm_count(const TridiagonalOperator& op, double x) {
    int count = 0;
    double d = op.diag[0] - x;
    if (std::abs(d) < kPivMin) d = -kPivMin;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < op.diag.size(); ++i) {
        const double e = op.offdiag[i - 1];
        d = op.diag[i] - x - e * e / d;
        if (std::abs(d) < kPivMin) d = -kPivMin;
        if (d < 0.0) ++count;
    }
    return count;
}

TridiagonalOperator build_on_grid(const PotentialParams& params, const ParticleSpec& spec,
                                  double E_trial, int l, qmath::CentrifugalMode mode,
                                  double r_lo, double r_hi, int n_grid) {
    if (n_grid < 100) throw DomainError("build_operator: n_grid must be >= 100");
    if (!(r_hi > r_lo)) throw DomainError("build_operator: invalid grid span");
    TridiagonalOperator op;
    op.h = (r_hi - r_lo) / n_grid;
    const double inv_h2 = 1.0 / (op.h * op.h);
    op.diag.resize(n_grid - 1);
    op.offdiag.assign(n_grid - 2, -0.5 * inv_h2);
    for (int i = 1; i < n_grid; ++i) {
        const double r = r_lo + i * op.h;
        double W = (E_trial + spec.M) * qmath::potential_value(params, r);
        if (l > 0) W += 0.5 * qmath::centrifugal(mode, l, params, r);
        op.diag[i - 1] = inv_h2 + W;
    }
    return op;
}

} // namespace

TridiagonalOperator build_operator(const PotentialParams& params, const ParticleSpec& spec,
                                   double E_trial, int l, const OracleConfig& config) {
    params.validate();
    spec.validate();
    if (!(E_trial > -spec.M && E_trial < spec.M))
        throw DomainError("build_operator: E_trial must lie in (-M, M)");
    const double r0 = qmath::inner_boundary(params);
    return build_on_grid(params, spec, E_trial, l, config.centrifugal_mode, r0,
                         r0 + config.r_max_factor / params.alpha, config.n_grid);
}

double eigenvalue_k(const TridiagonalOperator& op, int k) {
    const int n = static_cast<int>(op.diag.size());
    if (k < 0 || k >= n) throw IndexError("eigenvalue_k: k out of range");
    // Gershgorin bounds
    double lo = op.diag[0], hi = op.diag[0];
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(op.offdiag[i - 1]);
        if (i < n - 1) r += std::abs(op.offdiag[i]);
        lo = std::min(lo, op.diag[i] - r);
        hi = std::max(hi, op.diag[i] + r);
    }
    const double width_floor = 4.0 * std::numeric_limits<double>::epsilon() *
                               std::max(std::abs(lo), std::abs(hi));
    while (hi - lo > std::max(1e-13, width_floor)) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(op, mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> eigenvector_k(const TridiagonalOperator& op, double lambda) {
    const int n = static_cast<int>(op.diag.size());
    std::vector<double> v(n, 1.0);
    // deterministic sign-varying seed keeps the iteration from starting
    // orthogonal to the target for symmetric states
    for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(0.7 * i);
    const double shift = lambda + 1e-11 * (1.0 + std::abs(lambda));
    std::vector<double> c(n), d(n);
    for (int iter = 0; iter < 3; ++iter) {
        // Thomas solve (T - shift I) x = v
        d[0] = op.diag[0] - shift;
        if (d[0] == 0.0) d[0] = kPivMin;
        c[0] = op.offdiag.empty() ? 0.0 : op.offdiag[0] / d[0];
        std::vector<double> y(n);
        y[0] = v[0] / d[0];
        for (int i = 1; i < n; ++i) {
            const double e = op.offdiag[i - 1];
            d[i] = op.diag[i] - shift - e * c[i - 1];
            if (d[i] == 0.0) d[i] = kPivMin;
            if (i < n - 1) c[i] = op.offdiag[i] / d[i];
            y[i] = (v[i] - e * y[i - 1]) / d[i];
        }
        v[n - 1] = y[n - 1];
        for (int i = n - 2; i >= 0; --i) v[i] = y[i] - c[i] * v[i + 1];
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
    }
    return v;
}

int count_sign_changes(std::span<const double> v, double rel_eps) {
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    if (vmax == 0.0) return 0;
    const double cut = rel_eps * vmax;
    int changes = 0;
    double prev = 0.0;
    for (double x : v) {
        if (std::abs(x) < cut) continue;
        if (prev != 0.0 && x * prev < 0.0) ++changes;
        prev = x;
    }
    return changes;
}

double core_stability_emax(const PotentialParams& params, const ParticleSpec& spec, int l,
                           qmath::CentrifugalMode mode) {
    // Near the inner wall the effective potential behaves as -C(E)/rho^2 with
    //   C(E) = (E+M) V1/(alpha^2 |q|) - cent_core/2,
    // cent_core = l(l+1) (both modes share the 1/rho^2 coefficient when the
    // wall sits at r0 = 0; for r0 > 0 the exact mode contributes no 1/rho^2
    // term). The discretized problem is stable iff C(E) <= 1/8.
    const double M = spec.M;
    const double inf = std::numeric_limits<double>::infinity();
    const double aq = std::abs(params.q);
    const double a2 = params.alpha * params.alpha;
    if (params.regime() != Regime::Deep) return inf; // potential regular at r = 0
    double cent_core = 0.0;
    if (l > 0) {
        const double r0 = qmath::inner_boundary(params);
        const bool core_cent = (mode == qmath::CentrifugalMode::Approximate) || r0 == 0.0;
        if (core_cent) cent_core = static_cast<double>(l) * (l + 1);
    }
    // (E+M) V1/(a^2 aq) <= 1/8 + cent_core/... stability: 2(E+M)V1/(a^2 aq) - cent_core <= 1/4
    if (params.V1 <= 0.0) return inf;
    const double tmax = (0.25 + cent_core) * a2 * aq / (2.0 * params.V1);
    return -M + tmax;
}

OracleResult oracle_energy(const PotentialParams& params, const ParticleSpec& spec, int n_r,
                           int l, const OracleConfig& config) {
    params.validate();
    spec.validate();
    if (n_r < 0 || l < 0) throw DomainError("oracle_energy: n_r and l must be >= 0");

    const double M = spec.M;
    const double margin = 1e-9 * M;
    double e_lo = std::max(config.e_min, -M + margin);
    double e_hi = std::min({config.e_max, M - margin,
                            core_stability_emax(params, spec, l, config.centrifugal_mode)});
    if (!(e_hi > e_lo)) throw NoRootError("oracle_energy: empty scan window");

    const double r0 = qmath::inner_boundary(params);
    const double r_hi = r0 + config.r_max_factor / params.alpha;
    const int n_scan = config.n_grid;
    const int n_fine = config.refine_n_grid > 0 ? config.refine_n_grid : config.n_grid;

    auto g = [&](double E, int n_grid) {
        const TridiagonalOperator op = build_on_grid(params, spec, E, l,
                                                     config.centrifugal_mode, r0, r_hi, n_grid);
        return eigenvalue_k(op, n_r) - (E * E - M * M) / 2.0;
    };

    // scan for sign changes on the coarse grid
    const int pts = std::max(2, config.e_scan_points);
    const double step = (e_hi - e_lo) / (pts - 1);
    std::vector<std::pair<double, double>> brackets;
    double e_prev = e_lo, g_prev = g(e_lo, n_scan);
    for (int i = 1; i < pts; ++i) {
        const double e = e_lo + i * step;
        const double ge = g(e, n_scan);
        if (std::isfinite(g_prev) && std::isfinite(ge) && g_prev * ge < 0.0)
            brackets.emplace_back(e_prev, e);
        e_prev = e;
        g_prev = ge;
    }
    if (brackets.empty())
        throw NoRootError("oracle_energy: no self-consistent root for n_r=" +
                          std::to_string(n_r) + " l=" + std::to_string(l));

    const double tol = 1e-10 * M;
    auto bisect = [&](double a, double b, double fa, int n_grid) -> double {
        while (b - a > tol) {
            const double m = 0.5 * (a + b);
            const double fm = g(m, n_grid);
            if (fa * fm <= 0.0) {
                b = m;
            } else {
                a = m;
                fa = fm;
            }
        }
        return 0.5 * (a + b);
    };

    // The root location shifts between grids (by the discretization error of
    // the eigenvalue), so each stage re-brackets around the previous estimate
    // with an expanding half-width before bisecting.
    auto find_root_near = [&](double center, double d0, int n_grid) -> double {
        double d = std::max(d0, 8.0 * tol);
        while (true) {
            const double a = std::max(e_lo, center - d);
            const double b = std::min(e_hi, center + d);
            const double fa = g(a, n_grid);
            const double fb = g(b, n_grid);
            if (std::isfinite(fa) && std::isfinite(fb) && fa * fb <= 0.0)
                return bisect(a, b, fa, n_grid);
            if (a <= e_lo && b >= e_hi) return std::numeric_limits<double>::quiet_NaN();
            d *= 2.0;
        }
    };

    OracleResult res;
    res.n_r = n_r;
    res.l = l;
    int accepted = 0;
    for (std::size_t bi = 0; bi < brackets.size(); ++bi) {
        const double center = 0.5 * (brackets[bi].first + brackets[bi].second);
        const double E1 = find_root_near(center, step, n_fine);
        if (std::isnan(E1)) continue;

        // node check on the fine grid
        const TridiagonalOperator op = build_on_grid(params, spec, E1, l,
                                                     config.centrifugal_mode, r0, r_hi, n_fine);
        const double lam = eigenvalue_k(op, n_r);
        const std::vector<double> vec = eigenvector_k(op, lam);
        const int nodes = count_sign_changes(vec, 1e-8);
        if (nodes != n_r) continue;

        if (++accepted > 1) continue; // keep the first (lowest-E) root
        if (config.richardson) {
            const double E2 = find_root_near(E1, 64.0 * tol, 2 * n_fine);
            if (!std::isnan(E2)) {
                res.E = E2 + (E2 - E1) / 3.0;
                res.grid_error_estimate = std::abs(E2 - E1) / 3.0;
            } else {
                res.E = E1;
                res.grid_error_estimate = std::numeric_limits<double>::infinity();
            }
        } else {
            res.E = E1;
            res.grid_error_estimate = std::numeric_limits<double>::infinity();
        }
        res.converged = res.grid_error_estimate < 1e-7 * M;
    }
    if (accepted == 0)
        throw NodeMismatchError("oracle_energy: no bracketed root with " + std::to_string(n_r) +
                                " nodes");
    if (accepted > 1)
        log::warn("oracle_energy: " + std::to_string(accepted) +
                  " self-consistent roots for n_r=" + std::to_string(n_r) +
                  ", keeping the lowest");
    return res;
}

std::vector<ApproxErrorRow> approximation_error_report(const PotentialParams& params,
                                                       const ParticleSpec& spec,
                                                       const std::vector<ClosedLevel>& levels,
                                                       const OracleConfig& config) {
    std::vector<ApproxErrorRow> rows;
    for (const auto& cl : levels) {
        OracleConfig cfg = config;
        cfg.e_min = cl.win_lo;
        cfg.e_max = cl.win_hi;
        ApproxErrorRow row;
        row.n_r = cl.n_r;
        row.l = cl.l;
        row.E_closed = cl.E;
        cfg.centrifugal_mode = qmath::CentrifugalMode::Approximate;
        const OracleResult approx = oracle_energy(params, spec, cl.n_r, cl.l, cfg);
        if (cl.l == 0) {
            // both modes give a vanishing centrifugal term at l = 0
            row.E_approx = row.E_exact = approx.E;
        } else {
            cfg.centrifugal_mode = qmath::CentrifugalMode::Exact;
            const OracleResult exact = oracle_energy(params, spec, cl.n_r, cl.l, cfg);
            row.E_approx = approx.E;
            row.E_exact = exact.E;
        }
        row.dE_model = row.E_approx - row.E_closed;
        row.dE_phys = row.E_exact - row.E_approx;
        const int n_fine = config.refine_n_grid > 0 ? config.refine_n_grid : config.n_grid;
        row.h = (config.r_max_factor / params.alpha) / n_fine;
        row.converged = approx.converged;
        rows.push_back(row);
    }
    return rows;
}

} // namespace qspectra::oracle
