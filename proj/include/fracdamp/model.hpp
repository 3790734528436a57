#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fracdamp/errors.hpp"

namespace fracdamp {

/// Absolute tolerance for the boundary comparisons lambda+omega^2 vs 1 and
/// lambda vs 2*omega. Values within it map to Flat / CriticallyDamped so the
/// measure-zero boundary cases get deterministic labels.
inline constexpr double kClassifyTol = 1e-12;

/// Validated inputs of the oscillator x'' + lambda * D^nu x + omega^2 x = 0
/// with x(0) = x0, x'(0) = x1. lambda carries units of time^(nu-2), so the
/// damping term keeps the units of the classical equation. Immutable after
/// construction; safe to share across threads.
class OscillatorParams {
public:
    /// Checks lambda > 0, omega > 0, 0 <= nu <= 1; throws ValidationError
    /// naming the offending field. x0, x1 are unconstrained.
    static OscillatorParams validate(double lambda, double omega, double nu,
                                     double x0, double x1);

    double lambda() const noexcept { return lambda_; }
    double omega() const noexcept { return omega_; }
    double nu() const noexcept { return nu_; }
    double x0() const noexcept { return x0_; }
    double x1() const noexcept { return x1_; }

    /// key=value lines (lambda, omega, nu, x0, x1), one per line, LF,
    /// shortest-repr decimals. Round-trips bit-exactly through from_kv.
    std::string to_kv() const;
    static OscillatorParams from_kv(std::string_view text);

    static constexpr const char* csv_header() { return "lambda,omega,nu,x0,x1"; }
    std::string to_csv_row() const;
    static OscillatorParams from_csv_row(std::string_view line);

private:
    OscillatorParams(double lambda, double omega, double nu, double x0, double x1)
        : lambda_(lambda), omega_(omega), nu_(nu), x0_(x0), x1_(x1) {}

    double lambda_, omega_, nu_, x0_, x1_;
};

enum class InitialSlope { Increasing, Flat, Decreasing };
enum class TerminalDamping { UnderDamped, CriticallyDamped, OverDamped };

const char* to_string(InitialSlope s) noexcept;
const char* to_string(TerminalDamping t) noexcept;

/// One of the nine regimes: initial frequency-vs-order slope (sign of
/// lambda + omega^2 - 1) crossed with the terminal nu=1 damping regime
/// (sign of lambda - 2*omega). A pure function of (lambda, omega).
struct NineCase {
    InitialSlope initial_slope;
    TerminalDamping terminal;

    static NineCase from(double lambda, double omega);

    /// Lower-case compound label, e.g. "increasing-under", "flat-critical".
    std::string label() const;

    bool operator==(const NineCase&) const = default;
};

/// Upper-half-plane root of s^2 + lambda*s^nu + omega^2 = 0 in both polar
/// (r, theta) and Cartesian (beta, sigma) form. beta < 0 is the damping
/// rate, sigma > 0 the oscillation frequency; the conjugate root is implicit.
struct Pole {
    double r;
    double theta;
    double beta;
    double sigma;

    /// Requires beta < 0 and sigma > 0 (second quadrant); derives r, theta.
    static Pole from_cartesian(double beta, double sigma);
    /// Requires r > 0 and pi/2 < theta < pi; derives beta, sigma.
    static Pole from_polar(double r, double theta);
};

/// Pieces of the closed-form solution
///   x(t) = e^(beta t) (A cos(sigma t) + B sin(sigma t)) - decay(t),
/// with the decay function evaluated per requested time.
struct SolutionParts {
    double a_coef;
    double b_coef;
    double beta;
    double sigma;
    std::vector<double> decay;
};

enum class TrajectorySource { Analytic, Oracle, Classical };

const char* to_string(TrajectorySource s) noexcept;

/// Sampled time series. t strictly increasing, first sample at t = 0.
struct Trajectory {
    struct Sample {
        double t;
        double x;
    };

    std::vector<Sample> samples;
    TrajectorySource source;
    OscillatorParams params;
    double step = 0.0;

    /// Enforces the sampling invariant; throws DomainError on violation.
    void check() const;
};

}  // namespace fracdamp
