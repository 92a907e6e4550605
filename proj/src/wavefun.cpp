#include "qspectra/wavefun.hpp"

#include "qspectra/qmath.hpp"
#include "qspectra/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace qspectra::wavefun {

namespace {

// 64-point Gauss-Legendre nodes/weights on [-1, 1], Newton on P_64.
struct GaussLegendre64 {
    std::array<double, 64> x{};
    std::array<double, 64> w{};
    GaussLegendre64() {
        const int n = 64;
        for (int i = 0; i < n / 2; ++i) {
            double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = xi;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                const double dx = p1 / pp;
                xi -= dx;
                if (std::abs(dx) < 1e-15) {
                    p0 = 1.0;
                    p1 = xi;
                    for (int k = 2; k <= n; ++k) {
                        const double p2 = ((2.0 * k - 1.0) * xi * p1 - (k - 1.0) * p0) / k;
                        p0 = p1;
                        p1 = p2;
                    }
                    pp = n * (xi * p1 - p0) / (xi * xi - 1.0);
                    break;
                }
            }
            x[i] = -xi;
            x[n - 1 - i] = xi;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * pp * pp);
        }
    }
};

const GaussLegendre64& gl64() {
    static const GaussLegendre64 table;
    return table;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b, int panels) {
    const auto& g = gl64();
    const double hw = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * hw;
        const double mid = lo + 0.5 * hw;
        double acc = 0.0;
        for (int i = 0; i < 64; ++i) acc += g.w[i] * f(mid + 0.5 * hw * g.x[i]);
        total += acc * 0.5 * hw;
    }
    return total;
}

// Tail exponent of e^(-2 alpha w_tail r): w_l (Deep), w (Shallow), p (Positive;
// the +infinity channel carries the -2V2 radical there).
double tail_exponent(const spectrum::EnergyLevel& level) {
    if (level.aux.regime == Regime::Deep) return level.aux.deep.w_l;
    if (level.aux.regime == Regime::ShallowNegative) return level.aux.trans.w;
    return level.aux.trans.p;
}

double raw_wavefunction(const PotentialParams& params, const ParticleSpec& spec,
                        const spectrum::EnergyLevel& level, double r) {
    switch (level.aux.regime) {
        case Regime::Deep: return wavefunction_deep(params, spec, level, r);
        case Regime::ShallowNegative: return wavefunction_shallow(params, spec, level, r);
        case Regime::Positive: return wavefunction_positive(params, spec, level, r);
    }
    throw ParameterError("raw_wavefunction: bad regime");
}

} // namespace

double wavefunction_deep(const PotentialParams& params, const ParticleSpec& spec,
                         const spectrum::EnergyLevel& level, double r) {
    (void)spec;
    if (params.regime() != Regime::Deep)
        throw DomainError("wavefunction_deep: Deep regime required");
    const double r0 = qmath::inner_boundary(params);
    if (r < r0) throw DomainError("wavefunction_deep: r below the inner boundary");
    const double w = level.aux.deep.w_l;
    const double d = level.aux.deep.delta_l;
    const int n = level.n_r;
    const double y = std::abs(params.q) * std::exp(-2.0 * params.alpha * r);
    const double one_my = std::max(0.0, 1.0 - y);
    if (one_my == 0.0) return 0.0;
    const double log_norm =
        0.5 * (std::log(4.0 * params.alpha * w * (n + w + d) / (n + d)) +
               specfun::log_gamma(n + 1.0) + specfun::log_gamma(n + 2.0 * w + 2.0 * d) -
               specfun::log_gamma(n + 2.0 * w + 1.0) - specfun::log_gamma(n + 2.0 * d));
    const double jac = specfun::jacobi_p(n, 2.0 * w, 2.0 * d - 1.0, 1.0 - 2.0 * y);
    return std::exp(log_norm + d * std::log(one_my) + w * std::log(y)) * jac;
}

double wavefunction_shallow(const PotentialParams& params, const ParticleSpec& spec,
                            const spectrum::EnergyLevel& level, double r) {
    (void)spec;
    if (params.regime() != Regime::ShallowNegative)
        throw DomainError("wavefunction_shallow: -1 < q < 0 required");
    if (r < 0.0) throw DomainError("wavefunction_shallow: r must be >= 0");
    const auto& t = level.aux.trans;
    const double y = std::abs(params.q) * std::exp(-2.0 * params.alpha * r);
    const auto f = specfun::gauss_2f1(t.delta + t.w - t.p, t.delta + t.p + t.w,
                                      2.0 * t.w + 1.0, y);
    return std::pow(1.0 - y, t.delta) * std::pow(y, t.w) * f.value;
}

double wavefunction_positive(const PotentialParams& params, const ParticleSpec& spec,
                             const spectrum::EnergyLevel& level, double r) {
    (void)spec;
    if (params.regime() != Regime::Positive)
        throw DomainError("wavefunction_positive: q > 0 required");
    if (r < 0.0) throw DomainError("wavefunction_positive: r must be >= 0");
    const auto& t = level.aux.trans;
    const double e = params.q * std::exp(-2.0 * params.alpha * r);
    const double z = 1.0 / (1.0 + e);
    const double one_mz = e / (1.0 + e);
    const auto f = specfun::gauss_2f1(t.p + t.w - t.delta + 1.0, t.p + t.w + t.delta,
                                      2.0 * t.p + 1.0, one_mz);
    return std::pow(z, t.w) * std::pow(one_mz, t.p) * f.value;
}

double default_r_max(const PotentialParams& params, const spectrum::EnergyLevel& level) {
    const double a = params.alpha;
    const double r_inner = qmath::inner_boundary(params);
    const double wt = tail_exponent(level);
    const double cap = 1e4 / a;
    if (!(wt > 0.0)) throw TailError("default_r_max: non-positive tail exponent");
    // norm budget e^{-4 a w span} < 1e-12 and amplitude budget
    // e^{-2 a w span} < 1e-11 (the latter is the binding one)
    const double need = std::log(1e11) / (2.0 * a * wt);
    double span = std::max(50.0 / a, 10.0 / (a * wt));
    span = std::max(span, need);
    if (span > cap) {
        if (need > cap)
            throw TailError("default_r_max: tail budget needs r_max beyond r_inner + 1e4/alpha");
        span = cap;
    }
    return r_inner + span;
}

RadialTable normalize_numeric(const PotentialParams& params, const ParticleSpec& spec,
                              const spectrum::EnergyLevel& level, const RadialGrid& grid) {
    const double r_inner = qmath::inner_boundary(params);
    if (grid.n_points < 2) throw DomainError("normalize_numeric: grid needs >= 2 points");
    if (grid.r_min < r_inner - 1e-12 * (1.0 + std::abs(r_inner)))
        throw DomainError("normalize_numeric: grid starts below the inner boundary");
    if (!(grid.r_max > grid.r_min)) throw DomainError("normalize_numeric: empty grid span");

    const double r_quad_max = default_r_max(params, level);
    auto u2 = [&](double r) {
        const double u = raw_wavefunction(params, spec, level, r);
        return u * u;
    };

    // the integrand varies on the scale 1/(2 alpha m); panel width ~2/(alpha m)
    double m = 1.0;
    if (level.aux.regime == Regime::Deep)
        m = std::max({1.0, level.aux.deep.w_l, level.aux.deep.delta_l});
    else
        m = std::max({1.0, level.aux.trans.w, level.aux.trans.p, level.aux.trans.delta});
    int panels = std::max(
        {8, 4 * (level.n_r + 1),
         static_cast<int>(std::ceil(params.alpha * (r_quad_max - r_inner) * m / 2.0))});
    double integral = integrate_panels(u2, r_inner, r_quad_max, panels);
    for (; panels <= 16384; panels *= 2) {
        const double next = integrate_panels(u2, r_inner, r_quad_max, 2 * panels);
        const double diff = std::abs(next - integral);
        integral = next;
        if (diff <= 1e-12 * std::max(1.0, std::abs(integral))) break;
    }
    if (!(integral > 0.0)) throw ConvergenceError("normalize_numeric: vanishing norm integral");

    double scale = 1.0 / std::sqrt(integral);
    // sign convention: positive first lobe from the inner boundary
    double probe_max = 0.0;
    for (int i = 1; i <= 256; ++i) {
        const double r = r_inner + (r_quad_max - r_inner) * i / 257.0;
        probe_max = std::max(probe_max, std::abs(raw_wavefunction(params, spec, level, r)));
    }
    for (int i = 1; i <= 256; ++i) {
        const double r = r_inner + (r_quad_max - r_inner) * i / 257.0;
        const double u = raw_wavefunction(params, spec, level, r);
        if (std::abs(u) > 1e-6 * probe_max) {
            if (u < 0.0) scale = -scale;
            break;
        }
    }

    RadialTable table;
    table.grid = grid;
    table.level = level;
    table.values.resize(grid.n_points);
    const double step = (grid.r_max - grid.r_min) / (grid.n_points - 1);
    for (int i = 0; i < grid.n_points; ++i) {
        const double r = std::max(grid.r_min + i * step, r_inner);
        table.values[i] = scale * raw_wavefunction(params, spec, level, r);
    }
    table.norm = scale * scale * integral;
    return table;
}

int count_nodes(const RadialTable& table) {
    double vmax = 0.0;
    for (double v : table.values) vmax = std::max(vmax, std::abs(v));
    if (vmax == 0.0) return 0;
    const double cut = 1e-10 * vmax;
    int changes = 0;
    double prev = 0.0;
    for (double v : table.values) {
        if (std::abs(v) < cut) continue;
        if (prev != 0.0 && v * prev < 0.0) ++changes;
        prev = v;
    }
    return changes;
}

} // namespace qspectra::wavefun
