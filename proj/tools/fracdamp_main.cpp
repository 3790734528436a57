// fracdamp: command-line front end for the fractionally damped oscillator
// x'' + lambda * D^nu x + omega^2 x = 0 (Caputo damping, 0 <= nu <= 1).
// Emits deterministic CSV: identical flags produce byte-identical output.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fracdamp/acceptance.hpp"
#include "fracdamp/analytic.hpp"
#include "fracdamp/format.hpp"
#include "fracdamp/freqanalysis.hpp"
#include "fracdamp/oracle.hpp"
#include "fracdamp/polefinder.hpp"
#include "fracdamp/version.hpp"

namespace {

using namespace fracdamp;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

// Representative (lambda, omega) pairs, one per nine-case label.
const std::map<std::string, std::pair<double, double>>& presets() {
    static const std::map<std::string, std::pair<double, double>> table = {
        {"increasing-under", {1.0, 1.0}},
        {"increasing-critical", {2.0, 1.0}},
        {"increasing-over", {3.0, 1.0}},
        {"flat-under", {0.5, 1.0 / std::sqrt(2.0)}},
        {"flat-critical", {2.0 * (std::sqrt(2.0) - 1.0), std::sqrt(2.0) - 1.0}},
        {"flat-over", {15.0 / 16.0, 0.25}},
        {"decreasing-under", {0.5, 0.5}},
        {"decreasing-critical", {0.5, 0.25}},
        {"decreasing-over", {0.5, 0.125}},
    };
    return table;
}

std::string preset_help() {
    std::string s = "named (lambda, omega) preset:";
    for (const auto& [name, lw] : presets()) s += " " + name;
    return s;
}

analytic::DecayQuadratureConfig quadrature_config() {
    analytic::DecayQuadratureConfig cfg;
    if (const char* env = std::getenv("FRACDAMP_TOL")) {
        cfg.rel_tol = parse_double(env);
        if (!(cfg.rel_tol > 0.0)) throw ParseError("FRACDAMP_TOL must be positive");
    }
    return cfg;
}

// Numeric flags go through parse_number so rationals like 15/16 stay exact.
struct NumberFlag {
    std::string text;
    double value(const char* name) const {
        try {
            return parse_number(text);
        } catch (const ParseError&) {
            throw ParseError(std::string("flag --") + name + ": not a number: '" +
                             text + "'");
        }
    }
};

struct CommonFlags {
    NumberFlag lambda{"1"}, omega{"1"}, nu{"0.5"}, x0{"1"}, x1{"0"};
};

void add_param_flags(CLI::App* cmd, CommonFlags& f, bool with_nu, bool with_data) {
    cmd->add_option("--lambda", f.lambda.text, "damping coefficient (> 0)");
    cmd->add_option("--omega", f.omega.text, "restoring frequency (> 0)");
    if (with_nu) cmd->add_option("--nu", f.nu.text, "derivative order in [0, 1]");
    if (with_data) {
        cmd->add_option("--x0", f.x0.text, "initial displacement");
        cmd->add_option("--x1", f.x1.text, "initial velocity");
    }
}

OscillatorParams make_params(const CommonFlags& f, bool with_data) {
    return OscillatorParams::validate(
        f.lambda.value("lambda"), f.omega.value("omega"), f.nu.value("nu"),
        with_data ? f.x0.value("x0") : 0.0, with_data ? f.x1.value("x1") : 0.0);
}

std::string comment_for(const std::string& subcommand, const OscillatorParams& p,
                        const std::string& extra = {}) {
    std::string c = std::string("fracdamp ") + kVersion + " " + subcommand +
                    " lambda=" + format_double(p.lambda()) +
                    " omega=" + format_double(p.omega()) +
                    " nu=" + format_double(p.nu()) + " x0=" + format_double(p.x0()) +
                    " x1=" + format_double(p.x1());
    if (!extra.empty()) c += " " + extra;
    return c;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw ParseError("cannot open output file '" + path + "'");
    return file;
}

int run_poles(const CommonFlags& f) {
    const OscillatorParams p = make_params(f, false);
    double beta, sigma, r, theta;
    if (p.nu() == 0.0) {
        sigma = std::sqrt(p.lambda() + p.omega() * p.omega());
        beta = 0.0;
        r = sigma;
        theta = std::numbers::pi / 2.0;
    } else if (p.nu() == 1.0) {
        const auto rows = freqanalysis::sigma_sweep(p.lambda(), p.omega(), {});
        beta = rows.back().beta;
        sigma = rows.back().sigma;
        r = rows.back().r;
        theta = rows.back().theta;
    } else {
        const Pole pole = polefinder::find_pole(p);
        beta = pole.beta;
        sigma = pole.sigma;
        r = pole.r;
        theta = pole.theta;
    }
    const double residual = std::abs(
        polefinder::characteristic({beta, sigma}, p.lambda(), p.omega(), p.nu()));
    std::cout << "# " << comment_for("poles", p) << '\n'
              << "beta=" << format_double(beta) << '\n'
              << "sigma=" << format_double(sigma) << '\n'
              << "r=" << format_double(r) << '\n'
              << "theta=" << format_double(theta) << '\n'
              << "residual=" << format_double(residual) << '\n';
    return kExitOk;
}

int run_solve(const CommonFlags& f, const NumberFlag& t_max_flag,
              const NumberFlag& dt_flag, bool with_oracle,
              const std::string& out_path) {
    const OscillatorParams p = make_params(f, true);
    const double t_max = t_max_flag.value("t-max");
    const double dt = dt_flag.value("dt");
    if (!(dt > 0.0) || !(t_max >= dt))
        throw ParseError("require 0 < dt <= t-max");
    if (with_oracle && !(p.nu() > 0.0 && p.nu() < 1.0))
        throw ParseError("--with-oracle requires 0 < nu < 1");

    const auto cfg = quadrature_config();
    const analytic::PreparedSolution sol(p);
    const auto steps = static_cast<std::size_t>(std::llround(t_max / dt));

    std::vector<double> x_oracle;
    if (with_oracle) {
        const Trajectory traj = oracle::integrate(p, {dt, t_max});
        x_oracle.reserve(traj.samples.size());
        for (const auto& s : traj.samples) x_oracle.push_back(s.x);
    }

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << "# "
        << comment_for("solve", p,
                       "t-max=" + format_double(t_max) + " dt=" + format_double(dt) +
                           " rel-tol=" + format_double(cfg.rel_tol))
        << '\n';
    out << "t,x_analytic,x_oscillatory,x_decay";
    if (with_oracle) out << ",x_oracle";
    out << '\n';
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = double(k) * dt;
        const double osc = sol.oscillatory(t);
        const double dec = sol.decay(t, cfg);
        out << format_double(t) << ',' << format_double(osc - dec) << ','
            << format_double(osc) << ',' << format_double(dec);
        if (with_oracle) out << ',' << format_double(x_oracle.at(k));
        out << '\n';
    }
    return kExitOk;
}

int run_sweep(const CommonFlags& f, const std::string& preset,
              const NumberFlag& nu_min_flag, const NumberFlag& nu_max_flag,
              int nu_steps, const std::string& out_path) {
    double lambda, omega;
    std::string extra;
    if (!preset.empty()) {
        const auto it = presets().find(preset);
        if (it == presets().end())
            throw ParseError("unknown preset '" + preset + "'");
        lambda = it->second.first;
        omega = it->second.second;
        extra = "preset=" + preset;
    } else {
        lambda = f.lambda.value("lambda");
        omega = f.omega.value("omega");
    }
    OscillatorParams::validate(lambda, omega, 0.5, 0.0, 0.0);

    const double nu_min = nu_min_flag.value("nu-min");
    const double nu_max = nu_max_flag.value("nu-max");
    if (!(nu_min > 0.0 && nu_max < 1.0 && nu_min <= nu_max) || nu_steps < 1)
        throw ParseError("require 0 < nu-min <= nu-max < 1 and nu-steps >= 1");
    std::vector<double> grid;
    if (nu_steps == 1) {
        grid.push_back(nu_min);
    } else {
        for (int i = 0; i < nu_steps; ++i)
            grid.push_back(nu_min + (nu_max - nu_min) * i / (nu_steps - 1.0));
    }

    const auto rows = freqanalysis::sigma_sweep(lambda, omega, grid);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    std::string comment =
        std::string("fracdamp ") + kVersion + " sweep lambda=" + format_double(lambda) +
        " omega=" + format_double(omega) + " nu-min=" + format_double(nu_min) +
        " nu-max=" + format_double(nu_max) + " nu-steps=" + std::to_string(nu_steps);
    if (!extra.empty()) comment += " " + extra;
    freqanalysis::write_sweep_csv(out, rows, comment);
    return kExitOk;
}

int run_classify(const CommonFlags& f) {
    const double lambda = f.lambda.value("lambda");
    const double omega = f.omega.value("omega");
    OscillatorParams::validate(lambda, omega, 0.5, 0.0, 0.0);
    const NineCase c = freqanalysis::classify(lambda, omega);
    std::cout << "# fracdamp " << kVersion << " classify lambda=" << format_double(lambda)
              << " omega=" << format_double(omega) << '\n'
              << "initial_slope=" << to_string(c.initial_slope) << '\n'
              << "terminal=" << to_string(c.terminal) << '\n'
              << "label=" << c.label() << '\n'
              << "slope_at_zero=" << format_double(freqanalysis::initial_slope(lambda, omega))
              << '\n';
    return kExitOk;
}

int run_validate(const std::string& suite_name) {
    acceptance::Suite suite;
    if (suite_name == "quick")
        suite = acceptance::Suite::Quick;
    else if (suite_name == "full")
        suite = acceptance::Suite::Full;
    else
        throw ParseError("--suite must be quick or full");
    std::cout << "# fracdamp " << kVersion << " validate suite=" << suite_name << '\n';
    const auto results = acceptance::run_suite(suite, quadrature_config());
    const int failed = acceptance::print_report(std::cout, results);
    return failed == 0 ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractionally damped oscillator: poles, closed-form solution, "
                 "frequency-vs-order analysis"};
    app.require_subcommand(1);

    CommonFlags poles_flags, solve_flags, sweep_flags, classify_flags;
    NumberFlag t_max{"10"}, dt{"0.01"}, nu_min{"0.005"}, nu_max{"0.995"};
    int nu_steps = 199;
    bool with_oracle = false;
    std::string preset, out_path_solve, out_path_sweep, suite_name = "full";

    CLI::App* c_poles = app.add_subcommand("poles", "locate the upper-half-plane pole");
    add_param_flags(c_poles, poles_flags, true, false);

    CLI::App* c_solve = app.add_subcommand("solve", "evaluate x(t) on a time grid");
    add_param_flags(c_solve, solve_flags, true, true);
    c_solve->add_option("--t-max", t_max.text, "time horizon");
    c_solve->add_option("--dt", dt.text, "output step (and oracle step)");
    c_solve->add_flag("--with-oracle", with_oracle,
                      "add an x_oracle column from the time-domain integrator");
    c_solve->add_option("-o,--output", out_path_solve, "output file (default stdout)");

    CLI::App* c_sweep = app.add_subcommand("sweep", "sigma(nu) frequency sweep CSV");
    add_param_flags(c_sweep, sweep_flags, false, false);
    c_sweep->add_option("--preset", preset, preset_help());
    c_sweep->add_option("--nu-min", nu_min.text, "lowest interior order (> 0)");
    c_sweep->add_option("--nu-max", nu_max.text, "highest interior order (< 1)");
    c_sweep->add_option("--nu-steps", nu_steps, "number of interior grid points");
    c_sweep->add_option("-o,--output", out_path_sweep, "output file (default stdout)");

    CLI::App* c_classify = app.add_subcommand("classify", "nine-case regime label");
    add_param_flags(c_classify, classify_flags, false, false);

    CLI::App* c_validate = app.add_subcommand("validate", "run the acceptance suite");
    c_validate->add_option("--suite", suite_name, "quick or full (default full)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (c_poles->parsed()) return run_poles(poles_flags);
        if (c_solve->parsed())
            return run_solve(solve_flags, t_max, dt, with_oracle, out_path_solve);
        if (c_sweep->parsed())
            return run_sweep(sweep_flags, preset, nu_min, nu_max, nu_steps, out_path_sweep);
        if (c_classify->parsed()) return run_classify(classify_flags);
        if (c_validate->parsed()) return run_validate(suite_name);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitValidation;
}
