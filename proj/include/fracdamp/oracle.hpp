#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "fracdamp/model.hpp"

namespace fracdamp::oracle {

/// Time stepper configuration. The history sum makes a run O(n) state and
/// O(n^2) work, so the step count is bounded by memory_cap.
struct StepperConfig {
    double h;
    double t_max;
    std::size_t memory_cap = 1'000'000;

    /// Requires h > 0, t_max > 0, h <= t_max; throws DomainError otherwise.
    void check() const;
};

/// L1 weights b_k = (k+1)^(1-nu) - k^(1-nu), k = 0..n-1, for 0 < nu < 1.
/// Strictly decreasing and positive; the first n sum to n^(1-nu).
std::vector<double> caputo_l1_weights(double nu, std::size_t n);

/// Independent time-domain integration of the oscillator for 0 < nu < 1:
/// central-difference second derivative plus the L1 history sum for the
/// Caputo term, both at t_n, solved as an explicit recurrence in x_{n+1}.
/// The first step is seeded by the Taylor expansion
/// x(h) = x0 + h x1 - (h^2/2) omega^2 x0 (the Caputo derivative of a C^1
/// function vanishes at t = 0, so the damping term drops out there).
/// Convergence order is 2-nu. Throws MemoryCapExceeded before allocating
/// when t_max/h exceeds cfg.memory_cap.
Trajectory integrate(const OscillatorParams& p, const StepperConfig& cfg);

/// CSV with header "t,x" after a "# ..." comment line.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory,
                          std::string_view comment);

}  // namespace fracdamp::oracle
