#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qosc/serialize.hpp"
#include "qosc/verify.hpp"
#include "qosc/version.hpp"

namespace {

struct CommonOpts {
    std::string q_mode = "real";
    double w = 0.0;
    std::string casimir = "cq";
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_w = true)
{
    cmd->add_option("--q-mode", o.q_mode, "deformation regime")
        ->check(CLI::IsMember({"real", "circle"}));
    auto* wopt = cmd->add_option("--w", o.w, "deformation parameter w (q = e^w or e^{iw})");
    if (needs_w) {
        wopt->required();
    }
    cmd->add_option("--casimir", o.casimir, "Casimir operator choice")
        ->check(CLI::IsMember({"cq", "cqprime"}));
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
}

qosc::RunConfig make_config(const CommonOpts& o)
{
    qosc::RunConfig cfg;
    cfg.regime = o.q_mode == "real" ? qosc::QRegime::RealPositive : qosc::QRegime::UnitCircle;
    cfg.w = o.w;
    cfg.kind = o.casimir == "cq" ? qosc::CasimirKind::Cq : qosc::CasimirKind::CqPrime;
    cfg.format = o.format == "json" ? qosc::OutputFormat::Json : qosc::OutputFormat::Csv;
    return cfg;
}

void write_output(const std::string& content, const std::string& path)
{
    if (path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw qosc::parameter_error("cannot open output path: " + path);
    }
    out << content;
}

std::vector<double> linear_grid(double lo, double hi, int steps)
{
    if (steps < 1) {
        throw qosc::parameter_error("grid needs at least one point");
    }
    if (steps == 1) {
        return {lo};
    }
    std::vector<double> g(steps);
    for (int i = 0; i < steps; ++i) {
        g[i] = lo + (hi - lo) * i / (steps - 1.0);
    }
    return g;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"su_q(2)-invariant three-dimensional harmonic oscillator"};
    app.set_version_flag("--version", qosc::version_string);
    app.require_subcommand(1);

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "bound-state level table");
    CommonOpts spec_opts;
    int nmax = 10;
    int lmax = 10;
    double emax = std::numeric_limits<double>::infinity();
    add_common(spectrum_cmd, spec_opts);
    spectrum_cmd->add_option("--nmax", nmax, "largest radial quantum number");
    spectrum_cmd->add_option("--lmax", lmax, "largest angular momentum");
    spectrum_cmd->add_option("--emax", emax, "energy cutoff (default: none)");

    // quadrupole
    auto* quad_cmd = app.add_subcommand("quadrupole", "l=0 quadrupole moment sweep");
    CommonOpts quad_opts;
    int quad_n = 0;
    double wmin = 0.1;
    double wmax = 3.0;
    int wsteps = 30;
    add_common(quad_cmd, quad_opts, /*needs_w=*/false);
    quad_cmd->add_option("--n", quad_n, "radial quantum number");
    quad_cmd->add_option("--wmin", wmin, "sweep start");
    quad_cmd->add_option("--wmax", wmax, "sweep end");
    quad_cmd->add_option("--wsteps", wsteps, "sweep point count");

    // wavefunction
    auto* wave_cmd = app.add_subcommand("wavefunction", "radial wave function samples");
    CommonOpts wave_opts;
    int wave_n = 0;
    int wave_l = 0;
    std::string wave_branch = "only";
    double rmin = 0.05;
    double rmax = 6.0;
    int rsteps = 120;
    add_common(wave_cmd, wave_opts);
    wave_cmd->add_option("--n", wave_n, "radial quantum number");
    wave_cmd->add_option("--l", wave_l, "angular momentum");
    wave_cmd->add_option("--branch", wave_branch, "alpha branch")
        ->check(CLI::IsMember({"plus", "minus", "only", "double"}));
    wave_cmd->add_option("--rmin", rmin, "first sample radius");
    wave_cmd->add_option("--rmax", rmax, "last sample radius");
    wave_cmd->add_option("--rsteps", rsteps, "sample count");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the oracle suites");
    std::string suite = "all";
    std::string verify_out;
    verify_cmd->add_option("--suite", suite, "all or one module suite");
    verify_cmd->add_option("--out", verify_out, "output path (default stdout)");

    // algebra-check
    auto* alg_cmd = app.add_subcommand("algebra-check", "commutator residual lattice");
    CommonOpts alg_opts;
    std::vector<double> alg_s = {-2.0, -0.5, 0.0, 1.0, 3.5};
    std::vector<int> alg_m = {-3, -2, -1, 0, 1, 2, 3};
    int alg_wcount = 20;
    add_common(alg_cmd, alg_opts, /*needs_w=*/false);
    alg_cmd->add_option("--s", alg_s, "monomial exponents to sample");
    alg_cmd->add_option("--m", alg_m, "azimuthal numbers to sample");
    alg_cmd->add_option("--wcount", alg_wcount, "w grid size when --w is not given");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (spectrum_cmd->parsed()) {
            auto cfg = make_config(spec_opts);
            cfg.nmax = nmax;
            cfg.lmax = lmax;
            cfg.emax = emax;
            const auto levels =
                qosc::enumerate_levels(cfg.emax, cfg.nmax, cfg.lmax, cfg.kind, cfg.deformation());
            write_output(cfg.format == qosc::OutputFormat::Json
                             ? qosc::spectrum_json(cfg, levels)
                             : qosc::spectrum_csv(levels),
                         spec_opts.out_path);
            return 0;
        }

        if (quad_cmd->parsed()) {
            auto cfg = make_config(quad_opts);
            const auto grid = quad_cmd->count("--w") > 0 ? std::vector<double>{quad_opts.w}
                                                         : linear_grid(wmin, wmax, wsteps);
            const auto sweep = qosc::quadrupole_sweep(grid, quad_n, cfg.kind, cfg.regime);
            write_output(cfg.format == qosc::OutputFormat::Json
                             ? qosc::quadrupole_json(cfg, quad_n, sweep)
                             : qosc::quadrupole_csv(sweep),
                         quad_opts.out_path);
            return 0;
        }

        if (wave_cmd->parsed()) {
            auto cfg = make_config(wave_opts);
            const auto p = cfg.deformation();
            const auto branch = qosc::branch_from_name(wave_branch);
            const auto cls =
                qosc::classify_roots(qosc::casimir_eigenvalue(wave_l, cfg.kind, p), p);
            double alpha = 0.0;
            bool found = false;
            for (const auto& [b, a] : cls.branches()) {
                if (b == branch) {
                    alpha = a;
                    found = true;
                }
            }
            if (!found) {
                throw qosc::branch_error("branch '" + wave_branch +
                                         "' is not admissible for this configuration");
            }
            const auto state = qosc::RadialState::make(wave_n, alpha);
            std::vector<qosc::WavefunctionSample> samples;
            for (double r : linear_grid(rmin, rmax, rsteps)) {
                samples.push_back({r, qosc::radial_wavefunction(state, r)});
            }
            write_output(cfg.format == qosc::OutputFormat::Json
                             ? qosc::wavefunction_json(cfg, wave_l, branch, state, samples)
                             : qosc::wavefunction_csv(samples),
                         wave_opts.out_path);
            return 0;
        }

        if (verify_cmd->parsed()) {
            try {
                const auto results = qosc::verify::run_suite(suite);
                std::string out = qosc::verify::report(results);
                const bool ok = qosc::verify::all_passed(results);
                out += ok ? "all checks passed\n" : "verification FAILED\n";
                write_output(out, verify_out);
                return ok ? 0 : 1;
            } catch (const qosc::accuracy_error& e) {
                std::cerr << "verification aborted: " << e.what() << "\n";
                return 1;
            }
        }

        if (alg_cmd->parsed()) {
            auto cfg = make_config(alg_opts);
            std::vector<double> wgrid;
            if (alg_cmd->count("--w") > 0) {
                wgrid = {alg_opts.w};
            } else if (cfg.regime == qosc::QRegime::RealPositive) {
                wgrid = linear_grid(0.05, 0.6, alg_wcount);
            } else {
                wgrid = linear_grid(0.15, 2.9, alg_wcount);
            }
            std::vector<qosc::AlgebraResidualRow> rows;
            for (double w : wgrid) {
                const qosc::DeformationParameter p(cfg.regime, w);
                for (double s : alg_s) {
                    for (int m : alg_m) {
                        rows.push_back({s, m, w, qosc::commutator_residuals(s, m, p),
                                        qosc::q_number(2.0 * m, p)});
                    }
                }
            }
            cfg.w = wgrid.front();
            write_output(cfg.format == qosc::OutputFormat::Json ? qosc::algebra_json(cfg, rows)
                                                                : qosc::algebra_csv(rows),
                         alg_opts.out_path);
            return 0;
        }
    } catch (const qosc::branch_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qosc::parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
