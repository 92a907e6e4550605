// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion recomputes both routes (closed form and the
// finite-difference eigensolver) from scratch at the stated tolerances.

#include "qspectra/cli.hpp"
#include "qspectra/greens.hpp"
#include "qspectra/oracle.hpp"
#include "qspectra/qmath.hpp"
#include "qspectra/specfun.hpp"
#include "qspectra/spectrum.hpp"
#include "qspectra/wavefun.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace qspectra;
namespace sp = qspectra::spectrum;
namespace orc = qspectra::oracle;
namespace wf = qspectra::wavefun;
namespace gr = qspectra::greens;

namespace {

const ParticleSpec kSpec{1.0};
constexpr double kTol = 1e-6; // energy agreement tolerance in units of M

struct Check {
    bool ok = true;
    std::string detail;
    void fail(const std::string& msg) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

orc::OracleConfig tuned_config(double e_lo, double e_hi) {
    orc::OracleConfig cfg;
    cfg.n_grid = 3000;
    cfg.refine_n_grid = 24000;
    cfg.e_scan_points = 240;
    cfg.e_min = e_lo;
    cfg.e_max = e_hi;
    return cfg;
}

// oracle level for (n_r, l) within the analytic window
orc::OracleResult oracle_level(const PotentialParams& p, int n_r, int l,
                               qmath::CentrifugalMode mode, int scan_grid = 3000,
                               int refine_grid = 24000, double rmax_factor = 50.0,
                               int scan_points = 240) {
    const auto wins = sp::admissible_energy_window(p, kSpec, {0, l});
    if (wins.empty()) throw NoRootError("empty analytic window");
    orc::OracleConfig cfg;
    cfg.n_grid = scan_grid;
    cfg.refine_n_grid = refine_grid;
    cfg.e_scan_points = scan_points;
    cfg.r_max_factor = rmax_factor;
    cfg.centrifugal_mode = mode;
    cfg.e_min = wins.front().lo;
    cfg.e_max = wins.back().hi;
    return orc::oracle_energy(p, kSpec, n_r, l, cfg);
}

// ---- criterion 1 --------------------------------------------------------

bool criterion1(std::string& detail) {
    Check c;
    // stated grid: the supercritical core admits no genuine level on either route
    for (double alpha : {0.05, 0.1})
        for (double V1 : {0.05, 0.1})
            for (double V2 : {0.02, 0.05})
                for (double q : {-1.0, -3.0}) {
                    const PotentialParams p{V1, V2, alpha, q};
                    const auto res = sp::solve_spectrum_deep(p, kSpec, 3, 0);
                    if (!res.levels.empty())
                        c.fail("stated-grid set unexpectedly binds analytically");
                    const auto wins = sp::admissible_energy_window(p, kSpec, {0, 0});
                    for (const auto& w : wins) {
                        orc::OracleConfig cfg = tuned_config(w.lo, w.hi);
                        cfg.n_grid = 2000;
                        cfg.refine_n_grid = 8000;
                        try {
                            const auto r = orc::oracle_energy(p, kSpec, 0, 0, cfg);
                            c.fail("oracle found a level in the stated-grid window E=" +
                                   fmt(r.E));
                        } catch (const NoRootError&) {
                        } catch (const NodeMismatchError&) {
                        }
                    }
                }

    // binding grid: level-by-level agreement, both directions for n_r <= 3
    struct Set {
        double alpha, V1, V2, q;
        std::size_t expect;
    };
    const Set sets[] = {{0.05, 0.0, 0.05, -1.0, 4},
                        {0.1, 0.0, 0.1, -3.0, 4},
                        {0.05, -0.02, 0.05, -1.0, 1},
                        {0.1, -0.02, 0.05, -3.0, 1}};
    for (const auto& s : sets) {
        const PotentialParams p{s.V1, s.V2, s.alpha, s.q};
        const auto res = sp::solve_spectrum_deep(p, kSpec, 3, 0);
        if (res.levels.size() != s.expect) {
            c.fail("binding set level count " + std::to_string(res.levels.size()) +
                   " != " + std::to_string(s.expect));
            continue;
        }
        for (const auto& lv : res.levels) {
            const auto r = oracle_level(p, lv.n_r, 0, qmath::CentrifugalMode::Exact);
            if (std::abs(r.E - lv.E) >= kTol) {
                c.fail("deep level n_r=" + std::to_string(lv.n_r) +
                       " dE=" + fmt(r.E - lv.E));
            }
        }
        // no missed oracle level below the compared range
        for (int k = 0; k < static_cast<int>(s.expect); ++k) {
            bool seen = false;
            for (const auto& lv : res.levels) seen = seen || lv.n_r == k;
            if (!seen) c.fail("analytic list skips n_r=" + std::to_string(k));
        }
    }

    // the same cross-check drives cmd_verify
    namespace fs = std::filesystem;
    const fs::path out = fs::temp_directory_path() / "qspectra_accept_verify_deep";
    fs::remove_all(out);
    const int rc = cli::run({"verify", "--M", "1", "--alpha", "0.05", "--V1", "-0.02", "--V2",
                             "0.05", "--q", "-1", "--nmax", "0", "--grid-points", "3000",
                             "--out", out.string()});
    if (rc != 0) c.fail("cmd_verify (deep binding set) exited " + std::to_string(rc));
    fs::remove_all(out);

    detail = c.detail;
    return c.ok;
}

// ---- criterion 2 --------------------------------------------------------

bool criterion2(std::string& detail) {
    Check c;
    const PotentialParams sets[] = {{0.0, 0.05, 0.05, -1.0}, {0.0, 0.1, 0.1, -3.0}};
    for (const auto& p : sets) {
        const auto res = sp::solve_spectrum_deep(p, kSpec, 1, 2);
        for (int l : {1, 2})
            for (int n_r : {0, 1}) {
                const sp::EnergyLevel* found = nullptr;
                for (const auto& lv : res.levels)
                    if (lv.n_r == n_r && lv.l == l) found = &lv;
                if (!found) {
                    c.fail("missing closed-form level l=" + std::to_string(l) +
                           " n_r=" + std::to_string(n_r));
                    continue;
                }
                const auto r = oracle_level(p, n_r, l, qmath::CentrifugalMode::Approximate);
                if (std::abs(r.E - found->E) >= kTol)
                    c.fail("l=" + std::to_string(l) + " n_r=" + std::to_string(n_r) +
                           " dE=" + fmt(r.E - found->E));
            }
    }
    detail = c.detail;
    return c.ok;
}

// ---- criterion 3 --------------------------------------------------------

bool criterion3(std::string& detail) {
    Check c;
    for (int l : {1, 2}) {
        double prev = std::numeric_limits<double>::infinity();
        for (double alpha : {0.1, 0.05, 0.025}) {
            const PotentialParams p{0.0, 0.05, alpha, -1.0};
            const int scan_grid = alpha < 0.03 ? 8000 : 4000;
            const double rmax_factor = alpha < 0.03 ? 40.0 : 50.0;
            const auto ex = oracle_level(p, 0, l, qmath::CentrifugalMode::Exact, scan_grid,
                                         24000, rmax_factor, 400);
            const auto ap = oracle_level(p, 0, l, qmath::CentrifugalMode::Approximate,
                                         scan_grid, 24000, rmax_factor, 400);
            const double d = std::abs(ex.E - ap.E);
            if (!(d < prev))
                c.fail("l=" + std::to_string(l) + ": |dE| not decreasing at alpha=" +
                       fmt(alpha) + " (" + fmt(d) + " vs " + fmt(prev) + ")");
            prev = d;
        }
    }
    detail = c.detail;
    return c.ok;
}

// ---- criterion 4 --------------------------------------------------------

bool criterion4(std::string& detail) {
    Check c;
    struct Set {
        double alpha, V1, V2, q;
        std::size_t expect;
    };
    const Set sets[] = {{0.25, 0.0, 0.2, -0.5, 1},  {0.15, 0.0, 0.25, -0.5, 2},
                        {0.15, 0.0, 0.2, -0.25, 1}, {0.2, 0.08, 0.03, 2.0, 1},
                        {0.2, 0.15, 0.05, 2.0, 1},  {0.2, 0.08, 0.03, 0.5, 1},
                        {0.2, 0.15, 0.05, 0.5, 2}};
    for (const auto& s : sets) {
        const PotentialParams p{s.V1, s.V2, s.alpha, s.q};
        const auto res = sp::solve_spectrum_transcendental(p, kSpec, 8);
        if (res.levels.size() != s.expect) {
            c.fail("q=" + fmt(s.q) + ": root count " + std::to_string(res.levels.size()) +
                   " != " + std::to_string(s.expect));
            continue;
        }
        for (const auto& lv : res.levels) {
            const auto r = oracle_level(p, lv.n_r, 0, qmath::CentrifugalMode::Exact);
            if (std::abs(r.E - lv.E) >= kTol)
                c.fail("q=" + fmt(s.q) + " n_r=" + std::to_string(lv.n_r) +
                       " dE=" + fmt(r.E - lv.E));
            // node count must match the n_r label
            wf::RadialGrid grid{0.0, wf::default_r_max(p, lv), 8001};
            const auto table = wf::normalize_numeric(p, kSpec, lv, grid);
            if (wf::count_nodes(table) != lv.n_r)
                c.fail("node count mismatch at q=" + fmt(s.q) +
                       " n_r=" + std::to_string(lv.n_r));
        }
    }

    // spec-quoted shallow example set binds nothing on either route
    {
        const PotentialParams p{-0.05, 0.02, 0.25, -0.5};
        if (!sp::solve_spectrum_transcendental(p, kSpec, 4).levels.empty())
            c.fail("quoted empty shallow set has analytic roots");
        try {
            const auto r = oracle_level(p, 0, 0, qmath::CentrifugalMode::Exact, 2000, 8000);
            c.fail("quoted empty shallow set has an oracle level E=" + fmt(r.E));
        } catch (const NoRootError&) {
        }
    }

    // the q = 2 golden set also drives cmd_verify
    namespace fs = std::filesystem;
    const fs::path out = fs::temp_directory_path() / "qspectra_accept_verify_pos";
    fs::remove_all(out);
    const int rc = cli::run({"verify", "--M", "1", "--alpha", "0.2", "--V1", "0.08", "--V2",
                             "0.03", "--q", "2", "--nmax", "1", "--grid-points", "3000",
                             "--out", out.string()});
    if (rc != 0) c.fail("cmd_verify (q=2 set) exited " + std::to_string(rc));
    fs::remove_all(out);

    detail = c.detail;
    return c.ok;
}

// ---- criterion 5 --------------------------------------------------------

bool criterion5(std::string& detail) {
    Check c;
    const PotentialParams sets[] = {{0.0, 0.2, 0.25, -0.5}, {0.0, 0.25, 0.15, -0.5},
                                    {0.0, 0.2, 0.15, -0.25}, {0.08, 0.03, 0.2, 2.0},
                                    {0.15, 0.05, 0.2, 2.0},  {0.08, 0.03, 0.2, 0.5},
                                    {0.15, 0.05, 0.2, 0.5}};
    for (const auto& p : sets) {
        const auto roots = sp::solve_spectrum_transcendental(p, kSpec, 8).levels;
        const auto wins = sp::admissible_energy_window(p, kSpec, {0, 0});
        if (wins.empty()) {
            c.fail("unexpected empty window");
            continue;
        }
        const double x0 = gr::wall_coordinate(p);
        const double xp1 = x0 + 0.6, xp2 = x0 + 1.1;
        const int N = 4001;
        const double lo = wins.front().lo + 1e-9 * kSpec.M;
        const double hi = wins.back().hi - 1e-9 * kSpec.M;
        const double cell = (hi - lo) / (N - 1);

        // zeros of G(x0,x0), classified into genuine Dirichlet poles and
        // removable (complementary-domain) zeros by probing the growth of
        // the Dirichlet Green's function
        std::vector<double> genuine;
        double prev = gr::boundary_hyp_product(p, kSpec, lo);
        for (int i = 1; i < N; ++i) {
            const double E = lo + i * cell;
            const double cur = gr::boundary_hyp_product(p, kSpec, E);
            if (std::isfinite(prev) && std::isfinite(cur) && prev * cur < 0.0) {
                // refine the zero
                double a = E - cell, b = E, fa = prev;
                for (int it = 0; it < 60; ++it) {
                    const double m = 0.5 * (a + b);
                    const double fm = gr::boundary_hyp_product(p, kSpec, m);
                    if (fa * fm <= 0.0) {
                        b = m;
                    } else {
                        a = m;
                        fa = fm;
                    }
                }
                const double E0 = 0.5 * (a + b);
                auto dirichlet_mag = [&](double e) {
                    try {
                        return std::abs(gr::dirichlet_greens(p, kSpec, e, xp1, xp2));
                    } catch (const QuantizationPole&) {
                        return std::numeric_limits<double>::infinity();
                    }
                };
                const double near = dirichlet_mag(E0 + 1e-4 * cell) ;
                const double far = dirichlet_mag(E0 + 2.0 * cell);
                if (near > 50.0 * std::max(far, 1e-300)) genuine.push_back(E0);
            }
            prev = cur;
        }

        if (genuine.size() != roots.size()) {
            c.fail("q=" + fmt(p.q) + ": " + std::to_string(genuine.size()) +
                   " genuine G-zeros vs " + std::to_string(roots.size()) + " residual roots");
            continue;
        }
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (std::abs(genuine[i] - roots[i].E) > cell)
                c.fail("q=" + fmt(p.q) + ": zero/root separated by more than one cell");
    }
    detail = c.detail;
    return c.ok;
}

// ---- criterion 6 --------------------------------------------------------

bool criterion6(std::string& detail) {
    Check c;
    // (i) the positive-regime condition at q = 1 equals the Rosen-Morse form
    {
        const double V1 = 0.15, V2 = 0.03, alpha = 0.2;
        const PotentialParams wired{V1, -V2, alpha, 1.0}; // V2 -> -V2 wiring
        for (int i = 1; i < 40; ++i) {
            const double E = -0.95 + i * 0.045;
            const auto aux = sp::aux_parameters(wired, kSpec, E, {0, 0});
            if (!aux.admissible) continue;
            const double lhs = sp::quantization_residual_positive(wired, kSpec, E);
            const double rhs =
                specfun::gauss_2f1(aux.trans.p + aux.trans.w - aux.trans.delta + 1.0,
                                   aux.trans.p + aux.trans.w + aux.trans.delta,
                                   2.0 * aux.trans.p + 1.0, 0.5)
                    .value;
            if (std::abs(lhs - rhs) > 1e-14 * std::max(1.0, std::abs(rhs)))
                c.fail("q=1 reduction mismatch at E=" + fmt(E));
        }
    }
    // (ii) Eckart wiring reproduces the flipped-delta condition and its roots
    {
        const double V1e = -0.1, V2e = 0.1, alpha = 0.15;
        const PotentialParams wired{-V1e, V2e, alpha, 1.0};
        auto direct = [&](double E) {
            const double M = kSpec.M;
            const double db =
                0.5 * (1.0 + std::sqrt(1.0 - 8.0 * (E + M) * V1e / (alpha * alpha)));
            const double pp = std::sqrt((M + E) * (M - E - 2.0 * V2e)) / (2.0 * alpha);
            const double ww = std::sqrt((M + E) * (M - E + 2.0 * V2e)) / (2.0 * alpha);
            return specfun::gauss_2f1(pp + ww - db + 1.0, pp + ww + db, 2.0 * pp + 1.0, 0.5)
                .value;
        };
        for (int i = 1; i < 40; ++i) {
            const double E = -0.95 + i * 0.042;
            const auto aux = sp::aux_parameters(wired, kSpec, E, {0, 0});
            if (!aux.admissible) continue;
            const double lhs = sp::quantization_residual_positive(wired, kSpec, E);
            if (std::abs(lhs - direct(E)) > 1e-14 * std::max(1.0, std::abs(lhs)))
                c.fail("Eckart reduction mismatch at E=" + fmt(E));
        }
        const auto lv =
            sp::special_case_spectrum(sp::SpecialCaseKind::Eckart, {V1e, V2e, alpha, 1.0},
                                      kSpec, 3, 0);
        if (lv.levels.size() != 1) c.fail("Eckart set level count");
    }
    // (iii) the q = -1 Deep path is identical to the |q| = 1 closed forms
    {
        const PotentialParams p{-0.02, 0.05, 0.05, -7.0}; // q ignored by the special case
        const auto special =
            sp::special_case_spectrum(sp::SpecialCaseKind::ManningRosen, p, kSpec, 2, 1);
        PotentialParams direct = p;
        direct.q = -1.0;
        const auto ref = sp::solve_spectrum_deep(direct, kSpec, 2, 1);
        if (special.levels.size() != ref.levels.size()) {
            c.fail("Manning-Rosen delegation count mismatch");
        } else {
            for (std::size_t i = 0; i < ref.levels.size(); ++i)
                if (special.levels[i].E != ref.levels[i].E)
                    c.fail("Manning-Rosen delegation not bit-identical");
        }
        // residual formula equals the |q| = 1 expression assembled directly
        for (int i = 1; i < 30; ++i) {
            const double E = -0.9 + i * 0.06;
            const auto aux = sp::aux_parameters(direct, kSpec, E, {0, 0});
            if (!aux.admissible) continue;
            const double M = kSpec.M, a = direct.alpha;
            const double D = 0.0 + 0.5 + std::sqrt(0.25 - 2.0 * (M + E) * direct.V1 / (a * a));
            const double rhs = (M * M - E * E) -
                               ((M + E) * (M + E) * direct.V2 * direct.V2 / (a * a * D * D) +
                                a * a * D * D);
            const double lhs = sp::energy_residual_deep(direct, kSpec, E, {0, 0});
            if (std::abs(lhs - rhs) > 1e-13 * std::max(1.0, std::abs(rhs)))
                c.fail("(|q|=1) energy equation mismatch at E=" + fmt(E));
        }
    }
    detail = c.detail;
    return c.ok;
}

// ---- criterion 7 --------------------------------------------------------

bool criterion7(std::string& detail) {
    Check c;
    std::mt19937 rng(2026);

    // Gauss summation limit (error decreasing along z -> 1 down to the
    // double-precision noise floor)
    {
        std::uniform_real_distribution<double> u(0.2, 2.0);
        int bad = 0;
        for (int i = 0; i < 10000; ++i) {
            const double a = u(rng), b = u(rng), cc = a + b + 0.6 + u(rng);
            const double limit =
                std::exp(specfun::log_gamma(cc) + specfun::log_gamma(cc - a - b) -
                         specfun::log_gamma(cc - a) - specfun::log_gamma(cc - b));
            const double noise = 1e-12 * std::max(1.0, limit);
            double prev = std::numeric_limits<double>::infinity();
            bool ok = true;
            for (int k = 1; k <= 6; ++k) {
                const double z = 1.0 - std::pow(10.0, -k);
                const double err = std::abs(specfun::gauss_2f1(a, b, cc, z).value - limit);
                if (!(err <= std::max(prev * 1.05, noise))) ok = false;
                prev = err;
            }
            if (!ok) ++bad;
        }
        if (bad) c.fail("gauss summation: " + std::to_string(bad) + " bad samples");
    }
    // contiguous relation
    {
        std::uniform_real_distribution<double> pa(-2.0, 3.0);
        std::uniform_real_distribution<double> pc(0.3, 4.0);
        std::uniform_real_distribution<double> pz(0.0, 0.95);
        int bad = 0;
        auto near_nonpos_int = [](double x) {
            const double r = std::round(x);
            return r <= 0.5 && std::abs(x - r) < 1e-7;
        };
        for (int i = 0; i < 10000; ++i) {
            const double a = pa(rng), b = pa(rng), cc = pc(rng), z = pz(rng);
            // near-integer c-a-b amplifies cancellation in the connection
            // formula; such samples are outside the stated 1e-9 contract
            const double s = cc - a - b;
            if (std::abs(s - std::round(s)) < 1e-3) continue;
            if (std::abs((s - 1.0) - std::round(s - 1.0)) < 1e-3) continue;
            if (std::abs((s - b) - std::round(s - b)) < 1e-3) continue;
            // the polynomial-detection threshold changes the summed series
            // when a parameter sits essentially on a non-positive integer
            if (near_nonpos_int(a) || near_nonpos_int(a + 1.0) || near_nonpos_int(b) ||
                near_nonpos_int(b + 1.0))
                continue;
            const double f0 = specfun::gauss_2f1(a, b, cc, z).value;
            const double f1 = specfun::gauss_2f1(a + 1.0, b, cc, z).value;
            const double f2 = specfun::gauss_2f1(a + 1.0, b + 1.0, cc + 1.0, z).value;
            const double lhs = cc * f0 - cc * f1 + b * z * f2;
            const double scale =
                std::max({1.0, std::abs(cc * f0), std::abs(cc * f1), std::abs(b * z * f2)});
            if (std::abs(lhs) > 1e-9 * scale) ++bad;
        }
        if (bad) c.fail("contiguous relation: " + std::to_string(bad) + " bad samples");
    }
    // Jacobi symmetry
    {
        std::uniform_real_distribution<double> pab(-0.9, 4.0);
        std::uniform_real_distribution<double> px(-1.0, 1.0);
        int bad = 0;
        for (int i = 0; i < 10000; ++i) {
            const int n = i % 40;
            const double a = pab(rng), b = pab(rng), x = px(rng);
            const double lhs = specfun::jacobi_p(n, a, b, -x);
            const double rhs = ((n % 2) ? -1.0 : 1.0) * specfun::jacobi_p(n, b, a, x);
            if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(rhs))) ++bad;
        }
        if (bad) c.fail("jacobi symmetry: " + std::to_string(bad) + " bad samples");
    }
    // log-gamma recurrence
    {
        std::uniform_real_distribution<double> u(std::log(0.1), std::log(1e5));
        int bad = 0;
        for (int i = 0; i < 10000; ++i) {
            const double x = std::exp(u(rng));
            const double lhs = specfun::log_gamma(x + 1.0);
            const double rhs = specfun::log_gamma(x) + std::log(x);
            if (std::abs(lhs - rhs) > 1e-13 * std::max(1.0, std::abs(lhs))) ++bad;
        }
        if (bad) c.fail("log-gamma recurrence: " + std::to_string(bad) + " bad samples");
    }
    detail = c.detail;
    return c.ok;
}

// ---- criterion 8 --------------------------------------------------------

bool criterion8(std::string& detail) {
    Check c;
    auto check_level = [&](const PotentialParams& p, const sp::EnergyLevel& lv) {
        const double r_inner = qmath::inner_boundary(p);
        wf::RadialGrid grid{r_inner, wf::default_r_max(p, lv), 8001};
        const auto table = wf::normalize_numeric(p, kSpec, lv, grid);
        if (std::abs(table.norm - 1.0) > 1e-8)
            c.fail("norm " + fmt(table.norm) + " at n_r=" + std::to_string(lv.n_r) +
                   " q=" + fmt(p.q));
        if (wf::count_nodes(table) != lv.n_r)
            c.fail("nodes != n_r at q=" + fmt(p.q) + " n_r=" + std::to_string(lv.n_r) +
                   " l=" + std::to_string(lv.l));
        double umax = 0.0;
        for (double v : table.values) umax = std::max(umax, std::abs(v));
        // boundary vanishing at both ends
        const double eps_r = grid.r_min + 1e-8 / p.alpha;
        double u_eps = 0.0;
        switch (lv.aux.regime) {
            case Regime::Deep: u_eps = wf::wavefunction_deep(p, kSpec, lv, eps_r); break;
            case Regime::ShallowNegative:
                u_eps = wf::wavefunction_shallow(p, kSpec, lv, eps_r);
                break;
            case Regime::Positive:
                u_eps = wf::wavefunction_positive(p, kSpec, lv, eps_r);
                break;
        }
        // compare on the raw scale: rescale by the table normalization
        const double table_scale =
            std::abs(table.values[grid.n_points / 3]) > 0
                ? std::abs(table.values[grid.n_points / 3])
                : 1.0;
        double raw_at_third = 0.0;
        const double r_third = grid.r_min + (grid.r_max - grid.r_min) / 3.0;
        switch (lv.aux.regime) {
            case Regime::Deep: raw_at_third = wf::wavefunction_deep(p, kSpec, lv, r_third); break;
            case Regime::ShallowNegative:
                raw_at_third = wf::wavefunction_shallow(p, kSpec, lv, r_third);
                break;
            case Regime::Positive:
                raw_at_third = wf::wavefunction_positive(p, kSpec, lv, r_third);
                break;
        }
        const double C = std::abs(raw_at_third) > 0 ? table_scale / std::abs(raw_at_third) : 1.0;
        if (std::abs(u_eps) * C > 1e-6 * umax)
            c.fail("inner boundary value too large at q=" + fmt(p.q) +
                   " n_r=" + std::to_string(lv.n_r));
        if (std::abs(table.values.back()) > 1e-10 * umax)
            c.fail("outer boundary value too large at q=" + fmt(p.q));
    };

    const PotentialParams deep_sets[] = {{0.0, 0.05, 0.05, -1.0}, {0.0, 0.1, 0.1, -3.0}};
    for (const auto& p : deep_sets) {
        for (const auto& lv : sp::solve_spectrum_deep(p, kSpec, 3, 0).levels) check_level(p, lv);
        for (const auto& lv : sp::solve_spectrum_deep(p, kSpec, 1, 2).levels)
            if (lv.l > 0) check_level(p, lv);
    }
    const PotentialParams trans_sets[] = {{0.0, 0.2, 0.25, -0.5}, {0.0, 0.25, 0.15, -0.5},
                                          {0.0, 0.2, 0.15, -0.25}, {0.08, 0.03, 0.2, 2.0},
                                          {0.15, 0.05, 0.2, 2.0},  {0.08, 0.03, 0.2, 0.5},
                                          {0.15, 0.05, 0.2, 0.5}};
    for (const auto& p : trans_sets)
        for (const auto& lv : sp::solve_spectrum_transcendental(p, kSpec, 8).levels)
            check_level(p, lv);
    detail = c.detail;
    return c.ok;
}

// ---- criterion 9 --------------------------------------------------------

bool criterion9(std::string& detail) {
    Check c;
    struct Probe {
        PotentialParams p;
        int n_r, l;
    };
    const Probe probes[] = {{{-0.02, 0.05, 0.05, -1.0}, 0, 0},
                            {{0.0, 0.1, 0.1, -3.0}, 1, 0},
                            {{0.0, 0.2, 0.25, -0.5}, 0, 0},
                            {{0.08, 0.03, 0.2, 2.0}, 0, 0}};
    for (const auto& pr : probes) {
        const auto wins = sp::admissible_energy_window(pr.p, kSpec, {0, pr.l});
        orc::OracleConfig cfg;
        cfg.n_grid = 3000;
        cfg.e_scan_points = 240;
        cfg.richardson = false;
        cfg.e_min = wins.front().lo;
        cfg.e_max = wins.back().hi;
        double E[3];
        int n = 6000;
        for (int i = 0; i < 3; ++i, n *= 2) {
            cfg.refine_n_grid = n;
            E[i] = orc::oracle_energy(pr.p, kSpec, pr.n_r, pr.l, cfg).E;
        }
        const double ratio = std::abs(E[0] - E[1]) / std::abs(E[1] - E[2]);
        if (!(ratio >= 3.5 && ratio <= 4.5))
            c.fail("q=" + fmt(pr.p.q) + " ratio=" + fmt(ratio));
    }
    detail = c.detail;
    return c.ok;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<bool(std::string&)> fn;
    };
    const Criterion criteria[] = {
        {1, "Deep closed form vs oracle, l=0 (stated grid empty-empty + binding grid)",
         criterion1},
        {2, "Deep l>0 model consistency (approximate-centrifugal oracle)", criterion2},
        {3, "Centrifugal approximation error decreases with alpha", criterion3},
        {4, "Transcendental conditions vs oracle with node counts", criterion4},
        {5, "Green's-function pole-zero duality (4001-point scans)", criterion5},
        {6, "Special-case reductions (Rosen-Morse, Eckart, Manning-Rosen)", criterion6},
        {7, "Special-function property suites (>= 1e4 samples each)", criterion7},
        {8, "Wave-function invariants (boundary, norm, node counts)", criterion8},
        {9, "Discretization-order check (Richardson ratio in [3.5, 4.5])", criterion9},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = cr.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("criterion %d: %s — %s%s%s\n", cr.id, ok ? "PASS" : "FAIL", cr.title,
                    detail.empty() ? "" : " | ", detail.c_str());
        std::fflush(stdout);
    }
    if (failures)
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    else
        std::printf("ACCEPTANCE: all criteria passed\n");
    return failures;
}
