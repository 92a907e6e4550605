#include "qspectra/spectrum.hpp"

#include "qspectra/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace qspectra::spectrum {

namespace {

double sqrt_clamped(double x) { return std::sqrt(std::max(0.0, x)); }

// ---- radicands --------------------------------------------------------
//
// Every admissibility constraint is "radicand >= 0" with the radicand affine
// or quadratic in E. Quadratics appear as (M+E)(M-E+s) + c0
//   = -E^2 + sE + M(M+s) + c0.

struct Radicand {
    std::string name;
    double a2, a1, a0; // a2 E^2 + a1 E + a0
    double operator()(double E) const { return (a2 * E + a1) * E + a0; }
};

Radicand quad_radicand(std::string name, double M, double s, double c0) {
    return {std::move(name), -1.0, s, M * (M + s) + c0};
}

std::vector<Radicand> regime_radicands(const PotentialParams& p, const ParticleSpec& sp,
                                       int l) {
    const double M = sp.M;
    const double a2 = p.alpha * p.alpha;
    const double aq = std::abs(p.q);
    const Regime reg = p.regime();
    std::vector<Radicand> out;
    if (reg == Regime::Deep) {
        const double lph = l + 0.5;
        const double cl = a2 * l * (l + 1) / 3.0;
        // (l+1/2)^2 - 2(M+E)V1/(alpha^2 |q|)
        const double k = 2.0 * p.V1 / (a2 * aq);
        out.push_back({"delta", 0.0, -k, lph * lph - k * M});
        out.push_back(quad_radicand("w", M, -2.0 * p.V2, cl));
        out.push_back(quad_radicand("L", M, 2.0 * p.V2, cl));
    } else if (reg == Regime::ShallowNegative) {
        const double k = 8.0 * p.V1 / (a2 * aq);
        out.push_back({"delta", 0.0, -k, 1.0 - k * M});
        out.push_back(quad_radicand("p", M, 2.0 * p.V2, 0.0));
        out.push_back(quad_radicand("w", M, -2.0 * p.V2, 0.0));
    } else {
        const double k = 8.0 * p.V1 / (a2 * p.q);
        out.push_back({"delta", 0.0, k, 1.0 + k * M});
        out.push_back(quad_radicand("p", M, -2.0 * p.V2, 0.0));
        out.push_back(quad_radicand("w", M, 2.0 * p.V2, 0.0));
    }
    return out;
}

// ---- interval algebra --------------------------------------------------

struct Interval {
    double lo, hi;
};

std::vector<Interval> nonneg_set(const Radicand& r) {
    const double inf = std::numeric_limits<double>::infinity();
    if (r.a2 == 0.0) {
        if (r.a1 == 0.0) {
            if (r.a0 >= 0.0) return {{-inf, inf}};
            return {};
        }
        const double x = -r.a0 / r.a1;
        if (r.a1 > 0.0) return {{x, inf}};
        return {{-inf, x}};
    }
    // concave quadratic (a2 = -1): nonnegative between the roots
    const double disc = r.a1 * r.a1 - 4.0 * r.a2 * r.a0;
    if (disc < 0.0) return {}; // never nonnegative (a2 < 0)
    const double sq = std::sqrt(disc);
    const double x1 = (-r.a1 + sq) / (2.0 * r.a2);
    const double x2 = (-r.a1 - sq) / (2.0 * r.a2);
    return {{std::min(x1, x2), std::max(x1, x2)}};
}

std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    std::vector<Interval> out;
    for (const auto& ia : a)
        for (const auto& ib : b) {
            const double lo = std::max(ia.lo, ib.lo);
            const double hi = std::min(ia.hi, ib.hi);
            if (lo < hi) out.push_back({lo, hi});
        }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.lo < y.lo; });
    return out;
}

// ---- aux assembly ------------------------------------------------------

struct DeepQuantities {
    double delta_l, w_l, P_l; // P_l = L_E + 1/2
};

// All three radicands must already be nonnegative.
DeepQuantities deep_quantities(const PotentialParams& p, const ParticleSpec& sp, double E,
                               int l) {
    const double M = sp.M;
    const double a = p.alpha;
    const double aq = std::abs(p.q);
    const double lph = l + 0.5;
    const double cl = a * a * l * (l + 1) / 3.0;
    const double A = lph * lph - 2.0 * (M + E) * p.V1 / (a * a * aq);
    const double B = (M + E) * (M - E - 2.0 * p.V2) + cl;
    const double C = (M + E) * (M - E + 2.0 * p.V2) + cl;
    DeepQuantities q;
    q.delta_l = 0.5 + sqrt_clamped(A);
    q.w_l = sqrt_clamped(B) / (2.0 * a);
    q.P_l = sqrt_clamped(C) / (2.0 * a);
    return q;
}

TransAux trans_quantities(const PotentialParams& p, const ParticleSpec& sp, double E) {
    const double M = sp.M;
    const double a = p.alpha;
    TransAux t;
    if (p.regime() == Regime::ShallowNegative) {
        const double aq = std::abs(p.q);
        t.delta = 0.5 * (1.0 + sqrt_clamped(1.0 - 8.0 * (E + M) * p.V1 / (a * a * aq)));
        t.p = sqrt_clamped((M + E) * (M - E + 2.0 * p.V2)) / (2.0 * a);
        t.w = sqrt_clamped((M + E) * (M - E - 2.0 * p.V2)) / (2.0 * a);
    } else {
        t.delta = 0.5 * (1.0 + sqrt_clamped(1.0 + 8.0 * (E + M) * p.V1 / (a * a * p.q)));
        t.p = sqrt_clamped((M + E) * (M - E - 2.0 * p.V2)) / (2.0 * a);
        t.w = sqrt_clamped((M + E) * (M - E + 2.0 * p.V2)) / (2.0 * a);
    }
    return t;
}

// ---- generic scan-and-bisect ------------------------------------------

struct Root {
    double E;
    double cell_lo, cell_hi;
};

std::vector<Root> scan_roots(const std::function<double(double)>& f, double lo, double hi,
                             int points, double tol) {
    auto safe = [&f](double e) {
        try {
            return f(e);
        } catch (const DomainError&) {
            // boundary rounding can push a grid point a hair outside the window
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    std::vector<Root> roots;
    if (!(hi > lo) || points < 2) return roots;
    const double shrink = 1e-9 * (hi - lo);
    lo += shrink;
    hi -= shrink;
    const double step = (hi - lo) / (points - 1);
    double e_prev = lo;
    double f_prev = safe(lo);
    for (int i = 1; i < points; ++i) {
        const double e = lo + i * step;
        const double fe = safe(e);
        if (std::isfinite(f_prev) && std::isfinite(fe) && f_prev != 0.0 && f_prev * fe < 0.0) {
            double a = e_prev, b = e, fa = f_prev;
            while (b - a > tol) {
                const double m = 0.5 * (a + b);
                const double fm = f(m);
                if (fa * fm <= 0.0) {
                    b = m;
                } else {
                    a = m;
                    fa = fm;
                }
            }
            roots.push_back({0.5 * (a + b), e_prev, e});
        }
        e_prev = e;
        f_prev = fe;
    }
    return roots;
}

} // namespace

AuxParams aux_parameters(const PotentialParams& params, const ParticleSpec& spec, double E,
                         const QuantumNumbers& qn) {
    params.validate();
    spec.validate();
    const Regime reg = params.regime();
    if (reg != Regime::Deep && qn.l != 0)
        throw DomainError("aux_parameters: l must be 0 outside the Deep regime");

    AuxParams aux;
    aux.regime = reg;
    aux.admissible = true;

    for (const auto& rad : regime_radicands(params, spec, qn.l)) {
        if (rad(E) < 0.0) {
            aux.admissible = false;
            aux.reason = "radicand '" + rad.name + "' negative";
            break;
        }
    }

    if (reg == Regime::Deep) {
        if (aux.admissible) {
            const DeepQuantities q = deep_quantities(params, spec, E, qn.l);
            aux.deep.delta_l = q.delta_l;
            aux.deep.w_l = q.w_l;
            aux.deep.L_E = q.P_l - 0.5;
            aux.deep.M1 = (q.delta_l - 0.5) + q.w_l;
            aux.deep.M2 = (q.delta_l - 0.5) - q.w_l;
        }
    } else if (aux.admissible) {
        aux.trans = trans_quantities(params, spec, E);
        if (!(aux.trans.w > 0.0)) {
            aux.admissible = false;
            aux.reason = "w not positive (non-normalizable tail)";
        }
    }
    return aux;
}

std::vector<EnergyWindow> admissible_energy_window(const PotentialParams& params,
                                                   const ParticleSpec& spec,
                                                   const QuantumNumbers& qn) {
    params.validate();
    spec.validate();
    const Regime reg = params.regime();
    if (reg != Regime::Deep && qn.l != 0)
        throw DomainError("admissible_energy_window: l must be 0 outside the Deep regime");

    const double M = spec.M;
    const auto rads = regime_radicands(params, spec, qn.l);
    std::vector<Interval> acc = {{-M, M}};
    for (const auto& r : rads) acc = intersect(acc, nonneg_set(r));

    std::vector<EnergyWindow> out;
    for (const auto& iv : acc) {
        // rounding slivers from nearly-tangent quadratic roots are not windows
        if (iv.hi - iv.lo <= 1e-12 * M) continue;
        EnergyWindow w;
        w.lo = iv.lo;
        w.hi = iv.hi;
        const double tol = 1e-12 * M + 1e-12 * (std::abs(iv.lo) + std::abs(iv.hi));
        for (const auto& r : rads) {
            if (std::abs(r(iv.lo)) <= tol * std::max(1.0, std::abs(r.a1)) ||
                std::abs(r(iv.hi)) <= tol * std::max(1.0, std::abs(r.a1)))
                w.constraints_active.push_back(r.name);
        }
        if (std::abs(iv.lo + M) <= tol || std::abs(iv.hi - M) <= tol)
            w.constraints_active.push_back("domain");
        out.push_back(std::move(w));
    }
    return out;
}

double energy_residual_deep(const PotentialParams& params, const ParticleSpec& spec, double E,
                            const QuantumNumbers& qn) {
    if (params.regime() != Regime::Deep)
        throw DomainError("energy_residual_deep: Deep regime required");
    const AuxParams aux = aux_parameters(params, spec, E, qn);
    if (!aux.admissible)
        throw DomainError("energy_residual_deep: E outside admissible window (" + aux.reason + ")");
    const double M = spec.M;
    const double a = params.alpha;
    const double D = qn.n_r + aux.deep.delta_l; // n_r + 1/2 + sqrt(...)
    const double a2D2 = a * a * D * D;
    const double rhs = (M + E) * (M + E) * params.V2 * params.V2 / a2D2 + a2D2 -
                       a * a * qn.l * (qn.l + 1) / 3.0;
    return (M * M - E * E) - rhs;
}

double pole_condition_deep(const PotentialParams& params, const ParticleSpec& spec, double E,
                           const QuantumNumbers& qn) {
    if (params.regime() != Regime::Deep)
        throw DomainError("pole_condition_deep: Deep regime required");
    const AuxParams aux = aux_parameters(params, spec, E, qn);
    if (!aux.admissible)
        throw DomainError("pole_condition_deep: E outside admissible window (" + aux.reason + ")");
    const double P_l = aux.deep.L_E + 0.5;
    return qn.n_r + aux.deep.delta_l + aux.deep.w_l - P_l;
}

SpectrumResult solve_spectrum_deep(const PotentialParams& params, const ParticleSpec& spec,
                                   int n_r_max, int l_max, const SolverOptions& opts) {
    if (params.regime() != Regime::Deep)
        throw DomainError("solve_spectrum_deep: Deep regime required");
    if (n_r_max < 0 || l_max < 0)
        throw DomainError("solve_spectrum_deep: n_r_max and l_max must be >= 0");

    SpectrumResult result;
    const double tol = opts.bisect_tol * spec.M;
    for (int l = 0; l <= l_max; ++l) {
        const QuantumNumbers qn0{0, l};
        const auto windows = admissible_energy_window(params, spec, qn0);
        for (int n_r = 0; n_r <= n_r_max; ++n_r) {
            const QuantumNumbers qn{n_r, l};
            for (const auto& win : windows) {
                auto f = [&](double E) { return pole_condition_deep(params, spec, E, qn); };
                const auto roots = scan_roots(f, win.lo, win.hi, opts.deep_scan_points, tol);
                std::vector<EnergyLevel> kept;
                for (const auto& root : roots) {
                    AuxParams aux = aux_parameters(params, spec, root.E, qn);
                    if (!aux.admissible) continue;
                    if (!(aux.deep.w_l > 0.0)) continue;      // decaying tail
                    if (!(aux.deep.delta_l > 0.5)) continue;  // regular at the wall
                    EnergyLevel lv;
                    lv.E = root.E;
                    lv.n_r = n_r;
                    lv.l = l;
                    lv.residual = energy_residual_deep(params, spec, root.E, qn);
                    lv.method = SolveMethod::ClosedFormDeep;
                    lv.aux = std::move(aux);
                    kept.push_back(std::move(lv));
                }
                if (kept.size() > 1) {
                    for (auto& lv : kept) lv.multi_root = true;
                    result.warnings.push_back("multiple roots for n_r=" + std::to_string(n_r) +
                                              " l=" + std::to_string(l) + " in one window");
                }
                for (auto& lv : kept) result.levels.push_back(std::move(lv));
            }
        }
    }
    std::sort(result.levels.begin(), result.levels.end(), [](const auto& a, const auto& b) {
        if (a.l != b.l) return a.l < b.l;
        if (a.n_r != b.n_r) return a.n_r < b.n_r;
        return a.E < b.E;
    });
    return result;
}

double quantization_residual_shallow(const PotentialParams& params, const ParticleSpec& spec,
                                     double E) {
    if (params.regime() != Regime::ShallowNegative)
        throw DomainError("quantization_residual_shallow: -1 < q < 0 required");
    const AuxParams aux = aux_parameters(params, spec, E, {0, 0});
    if (!aux.admissible)
        throw DomainError("quantization_residual_shallow: E outside admissible window (" +
                          aux.reason + ")");
    const TransAux& t = aux.trans;
    return specfun::gauss_2f1(t.delta + t.w - t.p, t.delta + t.p + t.w, 2.0 * t.w + 1.0,
                              std::abs(params.q))
        .value;
}

double quantization_residual_positive(const PotentialParams& params, const ParticleSpec& spec,
                                      double E) {
    if (params.regime() != Regime::Positive)
        throw DomainError("quantization_residual_positive: q > 0 required");
    const AuxParams aux = aux_parameters(params, spec, E, {0, 0});
    if (!aux.admissible)
        throw DomainError("quantization_residual_positive: E outside admissible window (" +
                          aux.reason + ")");
    const TransAux& t = aux.trans;
    return specfun::gauss_2f1(t.p + t.w - t.delta + 1.0, t.p + t.w + t.delta, 2.0 * t.p + 1.0,
                              params.q / (1.0 + params.q))
        .value;
}

SpectrumResult solve_spectrum_transcendental(const PotentialParams& params,
                                             const ParticleSpec& spec, int count_max,
                                             const SolverOptions& opts) {
    const Regime reg = params.regime();
    if (reg == Regime::Deep)
        throw DomainError("solve_spectrum_transcendental: regime must not be Deep");
    if (count_max < 0) throw DomainError("solve_spectrum_transcendental: count_max must be >= 0");

    const bool shallow = reg == Regime::ShallowNegative;
    auto residual = [&](double E) {
        return shallow ? quantization_residual_shallow(params, spec, E)
                       : quantization_residual_positive(params, spec, E);
    };

    SpectrumResult result;
    const double tol = opts.bisect_tol * spec.M;
    const auto windows = admissible_energy_window(params, spec, {0, 0});
    std::vector<Root> all_roots;
    for (const auto& win : windows) {
        const auto roots = scan_roots(residual, win.lo, win.hi, opts.trans_scan_points, tol);
        all_roots.insert(all_roots.end(), roots.begin(), roots.end());
    }
    std::sort(all_roots.begin(), all_roots.end(),
              [](const Root& a, const Root& b) { return a.E < b.E; });

    int n_r = 0;
    for (const auto& root : all_roots) {
        if (n_r >= count_max) break;
        // post-refinement check of the bracketing cell for a second crossing
        int changes = 0;
        double prev = residual(root.cell_lo);
        for (int j = 1; j <= 16; ++j) {
            const double e = root.cell_lo + (root.cell_hi - root.cell_lo) * j / 16.0;
            const double v = residual(e);
            if (prev * v < 0.0) ++changes;
            prev = v;
        }
        if (changes > 1)
            result.warnings.push_back("scan cell near E=" + std::to_string(root.E) +
                                      " contains more than one residual crossing");
        EnergyLevel lv;
        lv.E = root.E;
        lv.n_r = n_r++;
        lv.l = 0;
        lv.residual = residual(root.E);
        lv.method = shallow ? SolveMethod::TranscendentalShallow : SolveMethod::TranscendentalPositive;
        lv.aux = aux_parameters(params, spec, root.E, {lv.n_r, 0});
        result.levels.push_back(std::move(lv));
    }
    return result;
}

SpectrumResult special_case_spectrum(SpecialCaseKind kind, const PotentialParams& params,
                                     const ParticleSpec& spec, int n_r_max, int l_max,
                                     const SolverOptions& opts) {
    PotentialParams wired = params;
    SpectrumResult res;
    switch (kind) {
        case SpecialCaseKind::ManningRosen:
            wired.q = -1.0;
            res = solve_spectrum_deep(wired, spec, n_r_max, l_max, opts);
            break;
        case SpecialCaseKind::RosenMorse:
            wired.q = 1.0;
            wired.V2 = -params.V2;
            res = solve_spectrum_transcendental(wired, spec, n_r_max + 1, opts);
            break;
        case SpecialCaseKind::Eckart:
            wired.q = 1.0;
            wired.V1 = -params.V1;
            res = solve_spectrum_transcendental(wired, spec, n_r_max + 1, opts);
            break;
    }
    for (auto& lv : res.levels) lv.method = SolveMethod::SpecialCase;
    return res;
}

} // namespace qspectra::spectrum
