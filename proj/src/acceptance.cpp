#include "fracdamp/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "fracdamp/freqanalysis.hpp"
#include "fracdamp/oracle.hpp"
#include "fracdamp/polefinder.hpp"

namespace fracdamp::acceptance {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kNuGrid = [] {
    std::vector<double> g;
    for (int i = 1; i <= 19; ++i) g.push_back(0.05 * i);
    return g;
}();
const std::vector<double> kLambdaGrid = {0.25, 0.5, 1.0, 2.0, 3.0};
const std::vector<double> kOmegaGrid = {0.25, 0.5, 1.0, 2.0};

// The nine representative (lambda, omega) sets, one per case label.
struct CaseSet {
    double lambda;
    double omega;
    InitialSlope slope;
    TerminalDamping terminal;
};

std::vector<CaseSet> nine_sets() {
    const double s2 = std::sqrt(2.0);
    return {
        {1.0, 1.0, InitialSlope::Increasing, TerminalDamping::UnderDamped},
        {2.0, 1.0, InitialSlope::Increasing, TerminalDamping::CriticallyDamped},
        {3.0, 1.0, InitialSlope::Increasing, TerminalDamping::OverDamped},
        {0.5, 1.0 / s2, InitialSlope::Flat, TerminalDamping::UnderDamped},
        {2.0 * (s2 - 1.0), s2 - 1.0, InitialSlope::Flat, TerminalDamping::CriticallyDamped},
        {15.0 / 16.0, 0.25, InitialSlope::Flat, TerminalDamping::OverDamped},
        {0.5, 0.5, InitialSlope::Decreasing, TerminalDamping::UnderDamped},
        {0.5, 0.25, InitialSlope::Decreasing, TerminalDamping::CriticallyDamped},
        {0.5, 0.125, InitialSlope::Decreasing, TerminalDamping::OverDamped},
    };
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

OscillatorParams params_of(double lambda, double omega, double nu,
                           double x0 = 0.0, double x1 = 0.0) {
    return OscillatorParams::validate(lambda, omega, nu, x0, x1);
}

CriterionResult pole_residual() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double nu : kNuGrid)
        for (double lambda : kLambdaGrid)
            for (double omega : kOmegaGrid) {
                const Pole pole = polefinder::find_pole(params_of(lambda, omega, nu));
                const std::complex<double> s(pole.beta, pole.sigma);
                const double res = std::abs(polefinder::characteristic(s, lambda, omega, nu));
                const double scale = std::max(omega * omega, pole.r * pole.r);
                worst = std::max(worst, res / scale);
            }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = worst <= 1e-10 && seconds < 1.0;
    return {1, "pole-residual", ok, worst, 1e-10,
            "max |s^2+lambda*s^nu+omega^2| / max(omega^2, r^2) over 380-point grid; " +
                num(seconds) + " s (limit 1)"};
}

CriterionResult angular_uniqueness() {
    constexpr int kSamples = 10000;
    int worst_changes_gap = 0;
    int monotonic_violations = 0;
    for (double nu : kNuGrid)
        for (double lambda : kLambdaGrid)
            for (double omega : kOmegaGrid) {
                const double rhs = polefinder::angular_rhs_log(lambda, omega, nu);
                const double lo = kPi / 2.0;
                const double width = polefinder::theta_max(nu) - lo;
                int changes = 0;
                bool prev_positive = true;
                double prev_value = std::numeric_limits<double>::infinity();
                for (int i = 1; i <= kSamples; ++i) {
                    const double theta = lo + width * i / (kSamples + 1.0);
                    const double value = polefinder::angular_lhs_log(theta, nu);
                    if (!(value < prev_value)) ++monotonic_violations;
                    prev_value = value;
                    const bool positive = value - rhs > 0.0;
                    if (i > 1 && positive != prev_positive) ++changes;
                    prev_positive = positive;
                }
                worst_changes_gap = std::max(worst_changes_gap, std::abs(changes - 1));
            }
    const bool ok = worst_changes_gap == 0 && monotonic_violations == 0;
    return {2, "angular-uniqueness", ok,
            double(worst_changes_gap + monotonic_violations), 0.0,
            "10^4-sample scans: exactly one sign change, strictly decreasing LHS, "
            "all 380 grid points"};
}

CriterionResult nu0_frequency() {
    double worst = 0.0;
    for (double lambda : kLambdaGrid)
        for (double omega : kOmegaGrid) {
            const auto rows = freqanalysis::sigma_sweep(lambda, omega, {});
            worst = std::max(worst,
                             std::abs(rows.front().sigma -
                                      std::sqrt(lambda + omega * omega)));
        }
    return {3, "nu0-frequency", worst <= 1e-12, worst, 1e-12,
            "|sigma(0) - sqrt(lambda+omega^2)| over the (lambda, omega) grid"};
}

CriterionResult terminal_frequency() {
    const double nu_end = 1.0 - 1e-6;
    const Pole under = polefinder::find_pole(params_of(1.0, 1.0, nu_end));
    const double under_gap = std::abs(under.sigma - std::sqrt(3.0) / 2.0);

    const Pole over_end = polefinder::find_pole(params_of(3.0, 1.0, nu_end));
    bool decreasing = true;
    double prev = polefinder::find_pole(params_of(3.0, 1.0, 0.9)).sigma;
    std::vector<double> tail_grid;
    for (int i = 1; i <= 9; ++i) tail_grid.push_back(0.9 + 0.01 * i);
    tail_grid.push_back(0.999);
    tail_grid.push_back(nu_end);
    for (double nu : tail_grid) {
        const double sigma = polefinder::find_pole(params_of(3.0, 1.0, nu)).sigma;
        if (!(sigma < prev)) decreasing = false;
        prev = sigma;
    }

    const bool ok = under_gap <= 1e-3 && over_end.sigma <= 0.05 && decreasing;
    return {4, "terminal-frequency", ok, under_gap, 1e-3,
            "lambda=1: |sigma(1-1e-6) - sqrt(3)/2| (limit 1e-3); lambda=3: "
            "sigma(1-1e-6)=" + num(over_end.sigma) + " (limit 0.05), decreasing on [0.9,1): " +
                (decreasing ? "yes" : "NO")};
}

CriterionResult initial_slope_check() {
    const double h = 1e-4;
    double worst = 0.0;
    for (const CaseSet& cs : nine_sets()) {
        const double sigma0 = std::sqrt(cs.lambda + cs.omega * cs.omega);
        const double sigma2h = polefinder::find_pole(params_of(cs.lambda, cs.omega, 2.0 * h)).sigma;
        const double fd = (sigma2h - sigma0) / (2.0 * h);
        const double slope = freqanalysis::initial_slope(cs.lambda, cs.omega);
        worst = std::max(worst, std::abs(fd - slope) / std::max(1.0, std::abs(slope)));
    }
    return {5, "initial-slope", worst <= 1e-4, worst, 1e-4,
            "central difference of sigma(nu) at nu=1e-4 (step 1e-4) vs "
            "lambda*ln(lambda+omega^2)/(4*sqrt(lambda+omega^2)), nine sets, "
            "relative with unit floor"};
}

CriterionResult nine_cases() {
    int mismatches = 0;
    std::string bad;
    for (const CaseSet& cs : nine_sets()) {
        const NineCase got = freqanalysis::classify(cs.lambda, cs.omega);
        if (got.initial_slope != cs.slope || got.terminal != cs.terminal) {
            ++mismatches;
            bad += " (" + num(cs.lambda) + "," + num(cs.omega) + ")->" + got.label();
        }
    }
    return {6, "nine-cases", mismatches == 0, double(mismatches), 0.0,
            mismatches == 0 ? "all nine labels correct" : "mismatches:" + bad};
}

CriterionResult frequency_peak() {
    std::vector<double> grid;
    for (int i = 1; i <= 200; ++i) grid.push_back(i / 201.0);
    const auto rows = freqanalysis::sigma_sweep(1.0, 1.0, grid);
    const double sigma0 = rows.front().sigma;
    std::size_t argmax = 1;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i)
        if (rows[i].sigma > rows[argmax].sigma) argmax = i;
    const double peak = rows[argmax].sigma;
    const bool interior = argmax > 1 && argmax + 2 < rows.size();
    const bool ok = peak > sigma0 && interior;
    return {7, "frequency-peak", ok, peak - sigma0, 0.0,
            "lambda=omega=1, 200-point grid: max sigma - sqrt(2) = " + num(peak - sigma0) +
                " at nu = " + num(rows[argmax].nu) + (interior ? " (interior)" : " (AT EDGE)")};
}

CriterionResult initial_conditions(const analytic::DecayQuadratureConfig& cfg) {
    const double h = 1e-4;
    const double nus[] = {0.25, 0.5, 0.8};
    const double lambdas[] = {0.5, 1.0, 2.0};
    const double omegas[] = {0.5, 1.0, 2.0};
    const std::pair<double, double> data[] = {{1.0, 0.0}, {0.0, 1.0}, {1.0, -1.0}};
    double worst_x0 = 0.0;
    double worst_x1 = 0.0;
    for (double nu : nus)
        for (double lambda : lambdas)
            for (double omega : omegas)
                for (auto [x0, x1] : data) {
                    const analytic::PreparedSolution sol(
                        params_of(lambda, omega, nu, x0, x1));
                    const double v0 = sol.value(0.0, cfg);
                    const double vh = sol.value(h, cfg);
                    worst_x0 = std::max(worst_x0, std::abs(v0 - x0));
                    worst_x1 = std::max(worst_x1, std::abs((vh - v0) / h - x1));
                }
    const bool ok = worst_x0 <= 1e-6 && worst_x1 <= 1e-3;
    return {8, "initial-conditions", ok, worst_x0, 1e-6,
            "3x3x3 grid x 3 data sets: max |x(0)-x0| (limit 1e-6); one-sided "
            "velocity gap " + num(worst_x1) + " (limit 1e-3)"};
}

CriterionResult oracle_agreement(Suite suite,
                                 const analytic::DecayQuadratureConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const double h1 = suite == Suite::Full ? 1e-3 : 5e-3;
    const double h2 = 0.5 * h1;
    const double t_max = 20.0;
    const double t_step = 0.05;
    const OscillatorParams p = params_of(1.0, 1.0, 0.5, 1.0, 0.0);

    const analytic::PreparedSolution sol(p);
    std::vector<double> times, reference;
    for (int i = 0; t_step * i <= t_max + 1e-12; ++i) {
        times.push_back(t_step * i);
        reference.push_back(sol.value(times.back(), cfg));
    }

    auto max_gap = [&](double h) {
        const Trajectory traj = oracle::integrate(p, {h, t_max, 1'000'000});
        const auto stride = static_cast<std::size_t>(std::llround(t_step / h));
        double gap = 0.0;
        for (std::size_t i = 0; i < times.size(); ++i) {
            const std::size_t k = i * stride;
            gap = std::max(gap, std::abs(reference[i] - traj.samples.at(k).x));
        }
        return gap;
    };

    const double gap1 = max_gap(h1);
    const double gap2 = max_gap(h2);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = gap1 <= 5e-3 && gap2 < gap1 && seconds < 30.0;
    return {9, "oracle-agreement", ok, gap1, 5e-3,
            "nu=0.5, lambda=omega=1: max |analytic - L1(h=" + num(h1) + ")| on [0,20]; "
            "halved step gives " + num(gap2) + "; " + num(seconds) + " s (limit 30)"};
}

CriterionResult decay_limits(const analytic::DecayQuadratureConfig& cfg) {
    struct Probe {
        double nu, x0, x1;
    };
    const Probe probes[] = {
        {1.0 - 1e-8, 1.0, 0.0},
        {1.0 - 1e-8, 0.0, 1.0},
        {1e-8, 0.0, 1.0},
    };
    double worst = 0.0;
    for (const Probe& pr : probes) {
        const OscillatorParams p = params_of(1.0, 1.0, pr.nu, pr.x0, pr.x1);
        for (int i = 0; i <= 20; ++i)
            worst = std::max(worst,
                             std::abs(analytic::decay_function(0.5 * i, p, cfg)));
    }
    return {10, "decay-limits", worst <= 1e-6, worst, 1e-6,
            "max |decay| on t in [0,10] at nu in {1e-8 (x0=0), 1-1e-8}"};
}

CriterionResult integrand_identity() {
    std::mt19937 rng(20260810u);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto logu = [&](double lo, double hi) {
        return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * u01(rng));
    };
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double R = logu(1e-3, 1e2);
        const double t = 10.0 * u01(rng);
        const double lambda = logu(0.25, 4.0);
        const double omega = logu(0.25, 4.0);
        const double nu = 0.01 + 0.98 * u01(rng);
        const double x0 = 0.1 + 1.9 * u01(rng);
        const double x1 = 0.1 + 1.9 * u01(rng);
        const OscillatorParams p = params_of(lambda, omega, nu, x0, x1);
        const double two_term = analytic::decay_integrand(R, t, p);
        const double simplified = analytic::decay_integrand_simplified(R, t, p);
        const double scale = std::max(std::abs(two_term), std::abs(simplified));
        if (scale > 0.0) worst = std::max(worst, std::abs(two_term - simplified) / scale);
    }
    return {11, "integrand-identity", worst <= 1e-12, worst, 1e-12,
            "two-term vs collapsed numerator, 10^3 random (R, t, params) samples, "
            "max relative gap"};
}

}  // namespace

std::vector<CriterionResult> run_suite(Suite suite,
                                       const analytic::DecayQuadratureConfig& cfg) {
    std::vector<CriterionResult> results;
    results.push_back(pole_residual());
    results.push_back(angular_uniqueness());
    results.push_back(nu0_frequency());
    results.push_back(terminal_frequency());
    results.push_back(initial_slope_check());
    results.push_back(nine_cases());
    results.push_back(frequency_peak());
    results.push_back(initial_conditions(cfg));
    results.push_back(oracle_agreement(suite, cfg));
    results.push_back(decay_limits(cfg));
    results.push_back(integrand_identity());
    return results;
}

int print_report(std::ostream& out, const std::vector<CriterionResult>& results) {
    int failed = 0;
    for (const CriterionResult& r : results) {
        if (!r.passed) ++failed;
        std::ostringstream line;
        line << (r.passed ? "[PASS] " : "[FAIL] ");
        line << (r.id < 10 ? "0" : "") << r.id << ' ' << r.name;
        for (std::size_t i = line.str().size(); i < 32; ++i) line << ' ';
        line.setf(std::ios::scientific);
        line.precision(3);
        line << "measured " << r.measured << "  limit " << r.threshold;
        out << line.str() << "\n       " << r.detail << "\n";
    }
    out << (failed == 0 ? "all criteria passed"
                        : std::to_string(failed) + " criteria FAILED")
        << " (" << results.size() << " total)\n";
    return failed;
}

}  // namespace fracdamp::acceptance
