#include "fracdamp/oracle.hpp"

#include <cmath>
#include <ostream>

#include "fracdamp/format.hpp"

namespace fracdamp::oracle {

void StepperConfig::check() const {
    if (!(h > 0.0)) throw DomainError("step h must be positive");
    if (!(t_max > 0.0)) throw DomainError("t_max must be positive");
    if (!(h <= t_max)) throw DomainError("step h must not exceed t_max");
}

std::vector<double> caputo_l1_weights(double nu, std::size_t n) {
    if (!(nu > 0.0 && nu < 1.0))
        throw DomainError("L1 weights require 0 < nu < 1");
    if (n < 1) throw DomainError("L1 weights require n >= 1");
    const double e = 1.0 - nu;
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k)
        w[k] = std::pow(double(k + 1), e) - std::pow(double(k), e);
    return w;
}

Trajectory integrate(const OscillatorParams& p, const StepperConfig& cfg) {
    cfg.check();
    const double nu = p.nu();
    if (!(nu > 0.0 && nu < 1.0))
        throw DomainError("the time-domain stepper requires 0 < nu < 1");

    const auto steps = static_cast<std::size_t>(std::llround(cfg.t_max / cfg.h));
    if (steps + 1 > cfg.memory_cap)
        throw MemoryCapExceeded("requested " + std::to_string(steps + 1) +
                                " samples, cap is " + std::to_string(cfg.memory_cap));

    const double h = cfg.h;
    const double lambda = p.lambda();
    const double om2 = p.omega() * p.omega();

    std::vector<double> x(steps + 1);
    std::vector<double> diff(steps);  // diff[j] = x[j+1] - x[j]
    x[0] = p.x0();
    if (steps >= 1) {
        // Taylor start: x''(0) = -omega^2 x0 because the Caputo derivative
        // of a C^1 function vanishes at t = 0 for nu < 1.
        x[1] = p.x0() + h * p.x1() - 0.5 * h * h * om2 * p.x0();
        diff[0] = x[1] - x[0];
    }

    const std::vector<double> w = caputo_l1_weights(nu, steps ? steps : 1);
    const double caputo_scale = std::pow(h, -nu) / std::tgamma(2.0 - nu);

    for (std::size_t n = 1; n < steps; ++n) {
        // D^nu x(t_n) ~ h^-nu / Gamma(2-nu) * sum_k b_k (x_{n-k} - x_{n-k-1})
        double hist = 0.0;
        for (std::size_t k = 0; k < n; ++k) hist += w[k] * diff[n - 1 - k];
        const double caputo = caputo_scale * hist;
        x[n + 1] = 2.0 * x[n] - x[n - 1] - h * h * (lambda * caputo + om2 * x[n]);
        diff[n] = x[n + 1] - x[n];
    }

    Trajectory traj{{}, TrajectorySource::Oracle, p, h};
    traj.samples.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k)
        traj.samples.push_back({double(k) * h, x[k]});
    traj.check();
    return traj;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          std::string_view comment) {
    if (!comment.empty()) out << "# " << comment << '\n';
    out << "t,x\n";
    for (const Trajectory::Sample& s : trajectory.samples)
        out << format_double(s.t) << ',' << format_double(s.x) << '\n';
}

}  // namespace fracdamp::oracle
