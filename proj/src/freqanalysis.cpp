#include "fracdamp/freqanalysis.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "fracdamp/analytic.hpp"
#include "fracdamp/format.hpp"
#include "fracdamp/polefinder.hpp"

namespace fracdamp::freqanalysis {

namespace {

constexpr double kPi = std::numbers::pi;

SweepRow endpoint_row_nu0(double lambda, double omega) {
    const double sigma = std::sqrt(lambda + omega * omega);
    return SweepRow{0.0, sigma, 0.0, sigma, kPi / 2.0};
}

// At nu = 1 the upper-half-plane pole either lands on the classical complex
// root (under-damped) or collapses onto the negative real axis. For the
// real-root regimes the continuity limit is the more negative root: a
// first-order perturbation of the characteristic around nu = 1 keeps
// Im(s) > 0 only where 2s + lambda < 0.
SweepRow endpoint_row_nu1(double lambda, double omega) {
    const analytic::ClassicalSolution cs = analytic::classical_poles(lambda, omega);
    switch (cs.kind) {
        case analytic::ClassicalCase::Under: {
            const double beta = -cs.alpha;
            const double sigma = cs.rho;
            return SweepRow{1.0, sigma, beta, std::hypot(beta, sigma),
                            std::atan2(sigma, beta)};
        }
        case analytic::ClassicalCase::Critical:
            return SweepRow{1.0, 0.0, cs.s3, -cs.s3, kPi};
        case analytic::ClassicalCase::Over:
            return SweepRow{1.0, 0.0, cs.s2, -cs.s2, kPi};
    }
    throw DomainError("unreachable classical case");
}

}  // namespace

std::complex<double> ds_dnu(const Pole& pole, const OscillatorParams& p) {
    const double nu = p.nu();
    if (!(nu > 0.0 && nu < 1.0))
        throw DomainError("ds_dnu requires 0 < nu < 1");
    const std::complex<double> s(pole.beta, pole.sigma);
    const std::complex<double> s_nu = std::pow(s, nu);
    const std::complex<double> denom = 2.0 * s * s + p.lambda() * nu * s_nu;
    if (std::abs(denom) < 1e-14)
        throw DegenerateDenominator("repeated pole: |2s^2 + lambda*nu*s^nu| = " +
                                    format_double(std::abs(denom)));
    return -p.lambda() * s_nu * std::log(s) * s / denom;
}

double initial_slope(double lambda, double omega) {
    if (!(lambda > 0.0) || !(omega > 0.0))
        throw DomainError("initial_slope requires lambda > 0 and omega > 0");
    const double s = lambda + omega * omega;
    return lambda * std::log(s) / (4.0 * std::sqrt(s));
}

NineCase classify(double lambda, double omega) {
    return NineCase::from(lambda, omega);
}

NineCase classify(const OscillatorParams& p) {
    return NineCase::from(p.lambda(), p.omega());
}

std::vector<SweepRow> sigma_sweep(double lambda, double omega,
                                  std::span<const double> nu_grid) {
    if (!(lambda > 0.0) || !(omega > 0.0))
        throw DomainError("sigma_sweep requires lambda > 0 and omega > 0");
    for (std::size_t i = 0; i < nu_grid.size(); ++i) {
        if (!(nu_grid[i] > 0.0 && nu_grid[i] < 1.0))
            throw DomainError("sweep grid values must lie strictly inside (0, 1)");
        if (i > 0 && !(nu_grid[i] > nu_grid[i - 1]))
            throw DomainError("sweep grid must be strictly increasing");
    }

    std::vector<SweepRow> rows;
    rows.reserve(nu_grid.size() + 2);
    rows.push_back(endpoint_row_nu0(lambda, omega));

    double theta_prev = 0.0;
    bool have_prev = false;
    for (double nu : nu_grid) {
        const OscillatorParams p = OscillatorParams::validate(lambda, omega, nu, 0.0, 0.0);
        const Pole pole = have_prev ? polefinder::find_pole(p, theta_prev)
                                    : polefinder::find_pole(p);
        rows.push_back(SweepRow{nu, pole.sigma, pole.beta, pole.r, pole.theta});
        theta_prev = pole.theta;
        have_prev = true;
    }

    rows.push_back(endpoint_row_nu1(lambda, omega));
    return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows,
                     std::string_view comment) {
    if (!comment.empty()) out << "# " << comment << '\n';
    out << "nu,sigma,beta,r,theta\n";
    for (const SweepRow& row : rows) {
        out << format_double(row.nu) << ',' << format_double(row.sigma) << ','
            << format_double(row.beta) << ',' << format_double(row.r) << ','
            << format_double(row.theta) << '\n';
    }
}

}  // namespace fracdamp::freqanalysis
