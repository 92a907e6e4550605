#include "qspectra/cli.hpp"

#include "qspectra/ioutil.hpp"
#include "qspectra/log.hpp"
#include "qspectra/oracle.hpp"
#include "qspectra/qmath.hpp"
#include "qspectra/spectrum.hpp"
#include "qspectra/types.hpp"
#include "qspectra/wavefun.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace qspectra::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ioutil::format_g17;

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
    double M = 1.0;
    double alpha = 0.0;
    double V1 = 0.0;
    double V2 = 0.0;
    double q = 0.0;
    int nmax = 3;
    int lmax = 0;
    double tol = 1e-6;
    int grid_points = 4000;
    double rmax_factor = 50.0;
    std::string centrifugal = "exact";
    std::string out_dir = ".";
    std::string config_file;
    // wavefunction / scan selectors and table shape
    int nr = 0;
    int l = 0;
    int points = 1001;
    double rmin = std::numeric_limits<double>::quiet_NaN();
    double rmax = std::numeric_limits<double>::quiet_NaN();
    // solver knobs and output units
    int scan_points = 0; // 0: regime default (2001 deep / 4001 transcendental)
    double bisect_tol = 1e-12;
    std::string e_unit = "natural"; // natural | M

    double e_scale() const { return e_unit == "M" ? 1.0 / M : 1.0; }
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    cmd->add_option("--M", o.M, "particle mass (natural units)");
    cmd->add_option("--alpha", o.alpha, "screening parameter (> 0)")->required();
    cmd->add_option("--V1", o.V1, "core strength");
    cmd->add_option("--V2", o.V2, "tail strength");
    cmd->add_option("--q", o.q, "deformation parameter (nonzero)")->required();
    cmd->add_option("--nmax", o.nmax, "largest radial index");
    cmd->add_option("--lmax", o.lmax, "largest orbital index (Deep regime only)");
    cmd->add_option("--tol", o.tol, "verification tolerance in units of M");
    cmd->add_option("--grid-points", o.grid_points, "finite-difference grid size");
    cmd->add_option("--rmax-factor", o.rmax_factor, "FD box length in units of 1/alpha");
    cmd->add_option("--centrifugal", o.centrifugal, "exact|approx")
        ->check(CLI::IsMember({"exact", "approx"}));
    cmd->add_option("--scan-points", o.scan_points, "root-scan grid density override");
    cmd->add_option("--bisect-tol", o.bisect_tol, "bisection tolerance in units of M");
    cmd->add_option("--e-unit", o.e_unit, "energy columns in natural units or units of M")
        ->check(CLI::IsMember({"natural", "M"}));
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--config", o.config_file, "JSON config file (flags may override)");
}

void add_selector_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--nr", o.nr, "radial index selector");
    cmd->add_option("--l", o.l, "orbital index selector");
    cmd->add_option("--points", o.points, "table points");
    cmd->add_option("--rmin", o.rmin, "table start (default: inner boundary)");
    cmd->add_option("--rmax", o.rmax, "table end (default: tail-determined)");
}

// Config file keys mirror flag names without dashes. Values from the file are
// injected before the command line so that explicit flags override them.
std::vector<std::string> splice_config(const std::vector<std::string>& args) {
    std::string cfg_path;
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") cfg_path = args[i + 1];
    for (const auto& a : args)
        if (a.rfind("--config=", 0) == 0) cfg_path = a.substr(9);
    if (cfg_path.empty()) return args;

    std::ifstream in(cfg_path);
    if (!in) throw ParameterError("cannot read config file: " + cfg_path);
    json j;
    in >> j;
    if (!j.is_object()) throw ParameterError("config file must hold a JSON object");

    std::vector<std::string> out;
    if (!args.empty()) out.push_back(args[0]); // subcommand name stays first
    for (const auto& [key, value] : j.items()) {
        std::string v;
        if (value.is_string()) v = value.get<std::string>();
        else v = value.dump();
        out.push_back("--" + key + "=" + v);
    }
    for (std::size_t i = args.empty() ? 0 : 1; i < args.size(); ++i) out.push_back(args[i]);
    return out;
}

PotentialParams make_params(const CommonOpts& o) {
    PotentialParams p;
    p.V1 = o.V1;
    p.V2 = o.V2;
    p.alpha = o.alpha;
    p.q = o.q;
    if (p.q == 0.0) throw ParameterError("q must be nonzero");
    if (!(p.alpha > 0.0)) throw ParameterError("alpha must be > 0");
    return p;
}

std::string timestamp_utc() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

json params_json(const PotentialParams& p, const ParticleSpec& s) {
    return json{{"M", s.M}, {"alpha", p.alpha}, {"V1", p.V1}, {"V2", p.V2}, {"q", p.q}};
}

json resolved_json(const CommonOpts& o) {
    return json{{"M", o.M},
                {"alpha", o.alpha},
                {"V1", o.V1},
                {"V2", o.V2},
                {"q", o.q},
                {"nmax", o.nmax},
                {"lmax", o.lmax},
                {"tol", o.tol},
                {"grid_points", o.grid_points},
                {"rmax_factor", o.rmax_factor},
                {"centrifugal", o.centrifugal},
                {"nr", o.nr},
                {"l", o.l},
                {"points", o.points},
                {"scan_points", o.scan_points},
                {"bisect_tol", o.bisect_tol},
                {"e_unit", o.e_unit}};
}

void write_manifest(const fs::path& dir, const std::string& command, const CommonOpts& o,
                    const PotentialParams& p, const ParticleSpec& s,
                    const std::map<std::string, std::string>& files, const json& extra) {
    json m;
    m["command"] = command;
    m["tool_version"] = kVersion;
    m["timestamp"] = timestamp_utc();
    m["params"] = params_json(p, s);
    m["resolved"] = resolved_json(o);
    json outs = json::object();
    for (const auto& [name, body] : files)
        outs[name] = json{{"fnv1a64", ioutil::fnv1a64_hex(body)}, {"bytes", body.size()}};
    m["outputs"] = outs;
    if (!extra.is_null()) m["extra"] = extra;
    ioutil::write_text_file((dir / "manifest.json").string(), m.dump(2) + "\n");
}

// Window of (-M, M) that contains E, as (lo, hi); NaNs when none does.
std::pair<double, double> window_of(const PotentialParams& p, const ParticleSpec& s, int l,
                                    double E) {
    for (const auto& w : spectrum::admissible_energy_window(p, s, {0, l}))
        if (E >= w.lo && E <= w.hi) return {w.lo, w.hi};
    return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
}

spectrum::SolverOptions solver_options(const CommonOpts& o) {
    spectrum::SolverOptions opts;
    if (o.scan_points > 1) {
        opts.deep_scan_points = o.scan_points;
        opts.trans_scan_points = o.scan_points;
    }
    opts.bisect_tol = o.bisect_tol;
    return opts;
}

spectrum::SpectrumResult solve_all(const PotentialParams& p, const ParticleSpec& s,
                                   const CommonOpts& o) {
    if (p.regime() == Regime::Deep)
        return spectrum::solve_spectrum_deep(p, s, o.nmax, o.lmax, solver_options(o));
    if (o.lmax > 0) log::info("lmax ignored outside the Deep regime (s-waves only)");
    return spectrum::solve_spectrum_transcendental(p, s, o.nmax + 1, solver_options(o));
}

std::string spectrum_csv(const PotentialParams& p, const ParticleSpec& s,
                         const std::vector<spectrum::EnergyLevel>& levels, double e_scale) {
    std::ostringstream csv;
    csv << "method,q_regime,n_r,l,E,residual,w,delta,p,"
           "admissible_window_lo,admissible_window_hi\r\n";
    for (const auto& lv : levels) {
        const auto [wlo, whi] = window_of(p, s, lv.l, lv.E);
        double wv, dv, pv = std::numeric_limits<double>::quiet_NaN();
        if (lv.aux.regime == Regime::Deep) {
            wv = lv.aux.deep.w_l;
            dv = lv.aux.deep.delta_l;
        } else {
            wv = lv.aux.trans.w;
            dv = lv.aux.trans.delta;
            pv = lv.aux.trans.p;
        }
        csv << to_string(lv.method) << ',' << to_string(lv.aux.regime) << ',' << lv.n_r << ','
            << lv.l << ',' << format_g17(lv.E * e_scale) << ',' << format_g17(lv.residual) << ','
            << format_g17(wv) << ',' << format_g17(dv) << ','
            << (std::isnan(pv) ? std::string() : format_g17(pv)) << ','
            << format_g17(wlo * e_scale) << ',' << format_g17(whi * e_scale) << "\r\n";
    }
    return csv.str();
}

int cmd_spectrum(const CommonOpts& o) {
    const PotentialParams p = make_params(o);
    const ParticleSpec s{o.M};
    const auto result = solve_all(p, s, o);
    for (const auto& w : result.warnings) log::warn(w);

    fs::create_directories(o.out_dir);
    const std::string csv = spectrum_csv(p, s, result.levels, o.e_scale());
    ioutil::write_text_file((fs::path(o.out_dir) / "spectrum.csv").string(), csv);
    json extra;
    extra["level_count"] = result.levels.size();
    extra["warnings"] = result.warnings;
    write_manifest(o.out_dir, "spectrum", o, p, s, {{"spectrum.csv", csv}}, extra);
    return result.levels.empty() ? 2 : 0;
}

int cmd_wavefunction(const CommonOpts& o) {
    const PotentialParams p = make_params(o);
    const ParticleSpec s{o.M};
    CommonOpts solver_opts = o;
    solver_opts.nmax = std::max(o.nmax, o.nr);
    solver_opts.lmax = std::max(o.lmax, o.l);
    const auto result = solve_all(p, s, solver_opts);

    const spectrum::EnergyLevel* found = nullptr;
    for (const auto& lv : result.levels)
        if (lv.n_r == o.nr && lv.l == o.l) found = &lv;
    if (!found) {
        log::error("requested level (n_r=" + std::to_string(o.nr) + ", l=" + std::to_string(o.l) +
                   ") does not exist");
        return 1;
    }

    wavefun::RadialGrid grid;
    grid.r_min = std::isnan(o.rmin) ? qmath::inner_boundary(p) : o.rmin;
    grid.r_max = std::isnan(o.rmax) ? wavefun::default_r_max(p, *found) : o.rmax;
    grid.n_points = o.points;
    const wavefun::RadialTable table = wavefun::normalize_numeric(p, s, *found, grid);

    std::ostringstream csv;
    csv << "r,u,u_squared\r\n";
    const double step = (grid.r_max - grid.r_min) / (grid.n_points - 1);
    for (int i = 0; i < grid.n_points; ++i) {
        const double r = grid.r_min + i * step;
        const double u = table.values[i];
        csv << format_g17(r) << ',' << format_g17(u) << ',' << format_g17(u * u) << "\r\n";
    }

    fs::create_directories(o.out_dir);
    const std::string name = "wf_" + std::to_string(o.nr) + "_" + std::to_string(o.l) + ".csv";
    ioutil::write_text_file((fs::path(o.out_dir) / name).string(), csv.str());
    json extra;
    extra["E"] = found->E;
    extra["norm"] = table.norm;
    extra["node_count"] = wavefun::count_nodes(table);
    write_manifest(o.out_dir, "wavefunction", o, p, s, {{name, csv.str()}}, extra);
    return 0;
}

oracle::OracleConfig oracle_config(const CommonOpts& o) {
    oracle::OracleConfig cfg;
    cfg.n_grid = o.grid_points;
    cfg.refine_n_grid = 4 * o.grid_points;
    cfg.r_max_factor = o.rmax_factor;
    cfg.centrifugal_mode = o.centrifugal == "approx" ? qmath::CentrifugalMode::Approximate
                                                     : qmath::CentrifugalMode::Exact;
    return cfg;
}

int cmd_verify(const CommonOpts& o) {
    const PotentialParams p = make_params(o);
    const ParticleSpec s{o.M};
    const auto result = solve_all(p, s, o);
    const oracle::OracleConfig cfg = oracle_config(o);

    std::vector<oracle::ApproxErrorRow> rows;
    if (p.regime() == Regime::Deep) {
        std::vector<oracle::ClosedLevel> closed;
        for (const auto& lv : result.levels) {
            const auto [lo, hi] = window_of(p, s, lv.l, lv.E);
            closed.push_back({lv.n_r, lv.l, lv.E, lo, hi});
        }
        rows = oracle::approximation_error_report(p, s, closed, cfg);
    } else {
        for (const auto& lv : result.levels) {
            const auto [lo, hi] = window_of(p, s, 0, lv.E);
            oracle::OracleConfig c = cfg;
            c.e_min = lo;
            c.e_max = hi;
            const auto orc = oracle::oracle_energy(p, s, lv.n_r, 0, c);
            oracle::ApproxErrorRow row;
            row.n_r = lv.n_r;
            row.l = 0;
            row.E_closed = lv.E;
            row.E_approx = row.E_exact = orc.E;
            row.dE_model = orc.E - lv.E;
            row.dE_phys = 0.0;
            row.h = (o.rmax_factor / p.alpha) / cfg.refine_n_grid;
            row.converged = orc.converged;
            rows.push_back(row);
        }
    }

    std::ostringstream csv;
    csv << "n_r,l,E_closed,E_approx,E_exact,dE_model,dE_phys,h,converged,pass\r\n";
    bool all_pass = true;
    for (const auto& r : rows) {
        const bool pass = std::abs(r.dE_model) < o.tol * s.M;
        all_pass = all_pass && pass;
        const double es = o.e_scale();
        csv << r.n_r << ',' << r.l << ',' << format_g17(r.E_closed * es) << ','
            << format_g17(r.E_approx * es) << ',' << format_g17(r.E_exact * es) << ','
            << format_g17(r.dE_model * es) << ',' << format_g17(r.dE_phys * es) << ','
            << format_g17(r.h) << ',' << (r.converged ? 1 : 0) << ',' << (pass ? 1 : 0)
            << "\r\n";
    }

    fs::create_directories(o.out_dir);
    ioutil::write_text_file((fs::path(o.out_dir) / "verify.csv").string(), csv.str());
    json extra;
    extra["rows"] = rows.size();
    extra["all_pass"] = all_pass;
    write_manifest(o.out_dir, "verify", o, p, s, {{"verify.csv", csv.str()}}, extra);
    if (rows.empty()) return 2;
    return all_pass ? 0 : 3;
}

int cmd_scan(const CommonOpts& o) {
    const PotentialParams p = make_params(o);
    const ParticleSpec s{o.M};
    const Regime reg = p.regime();

    const QuantumNumbers qn{o.nr, reg == Regime::Deep ? o.l : 0};
    const auto windows = spectrum::admissible_energy_window(p, s, {0, qn.l});
    if (windows.empty()) {
        log::error("scan: empty admissible window");
        return 1;
    }

    auto residual = [&](double E) {
        switch (reg) {
            case Regime::Deep: return spectrum::pole_condition_deep(p, s, E, qn);
            case Regime::ShallowNegative: return spectrum::quantization_residual_shallow(p, s, E);
            case Regime::Positive: return spectrum::quantization_residual_positive(p, s, E);
        }
        return 0.0;
    };

    // roots from the production solvers, for the root column
    std::vector<double> roots;
    if (reg == Regime::Deep) {
        for (const auto& lv : spectrum::solve_spectrum_deep(p, s, o.nr, qn.l).levels)
            if (lv.n_r == o.nr && lv.l == qn.l) roots.push_back(lv.E);
    } else {
        for (const auto& lv : spectrum::solve_spectrum_transcendental(p, s, o.nmax + 1).levels)
            roots.push_back(lv.E);
    }

    std::ostringstream csv;
    csv << "E,residual,root\r\n";
    for (const auto& w : windows) {
        const int pts = 1001;
        const double shrink = 1e-9 * (w.hi - w.lo);
        for (int i = 0; i < pts; ++i) {
            const double E = (w.lo + shrink) + (w.hi - w.lo - 2 * shrink) * i / (pts - 1);
            csv << format_g17(E * o.e_scale()) << ',' << format_g17(residual(E))
                << ",0\r\n";
        }
    }
    for (double r : roots)
        csv << format_g17(r * o.e_scale()) << ',' << format_g17(residual(r)) << ",1\r\n";

    fs::create_directories(o.out_dir);
    ioutil::write_text_file((fs::path(o.out_dir) / "scan.csv").string(), csv.str());
    json extra;
    extra["roots"] = roots;
    write_manifest(o.out_dir, "scan", o, p, s, {{"scan.csv", csv.str()}}, extra);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& raw_args) {
    CLI::App app{"Bound states of a Klein-Gordon particle in equal vector and scalar "
                 "q-deformed Rosen-Morse-type potentials"};
    app.require_subcommand(1);

    CommonOpts o;
    CLI::App* c_spectrum = app.add_subcommand("spectrum", "solve the bound-state spectrum");
    add_common_flags(c_spectrum, o);
    CLI::App* c_wf = app.add_subcommand("wavefunction", "tabulate a normalized radial function");
    add_common_flags(c_wf, o);
    add_selector_flags(c_wf, o);
    CLI::App* c_verify = app.add_subcommand("verify", "cross-check against the FD eigensolver");
    add_common_flags(c_verify, o);
    CLI::App* c_scan = app.add_subcommand("scan", "tabulate the quantization residual");
    add_common_flags(c_scan, o);
    add_selector_flags(c_scan, o);

    std::vector<std::string> args;
    try {
        args = splice_config(raw_args);
    } catch (const std::exception& e) {
        log::error(e.what());
        return 1;
    }

    try {
        // CLI11 parses reversed argv-style vectors
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (c_spectrum->parsed()) return cmd_spectrum(o);
        if (c_wf->parsed()) return cmd_wavefunction(o);
        if (c_verify->parsed()) return cmd_verify(o);
        if (c_scan->parsed()) return cmd_scan(o);
        return 1;
    } catch (const QuantizationPole& e) {
        log::error(e.what());
        return 1;
    } catch (const std::exception& e) {
        log::error(e.what());
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace qspectra::cli
