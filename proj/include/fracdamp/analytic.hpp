#pragma once

#include <optional>
#include <span>
#include <utility>

#include "fracdamp/model.hpp"

namespace fracdamp::analytic {

struct DecayQuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;

    /// Throws DomainError unless tolerances and the subdivision limit are positive.
    void check() const;
};

enum class ClassicalCase { Over, Critical, Under };

const char* to_string(ClassicalCase c) noexcept;

/// Roots of s^2 + lambda*s + omega^2 = 0 by regime. Over: two distinct
/// negative roots s1 > s2. Critical: repeated root s3 = -lambda/2 = -omega.
/// Under: complex pair -alpha +/- i*rho with alpha = lambda/2,
/// rho = sqrt(omega^2 - lambda^2/4).
struct ClassicalSolution {
    ClassicalCase kind;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    double alpha = 0.0;
    double rho = 0.0;
};

ClassicalSolution classical_poles(double lambda, double omega);

/// Classical nu=1 solution for the matching regime. Requires p.nu() == 1.
double classical_solve(double t, const OscillatorParams& p);

/// Residue coefficients (A, B) of the conjugate pole pair: with
/// c = (s*x0 + x1 + x0*lambda*s^(nu-1)) / (2s + nu*lambda*s^(nu-1)) at
/// s = beta + i*sigma, the pair sums to e^(beta t)(A cos + B sin) with
/// A = 2 Re c, B = -2 Im c. Throws DegenerateDenominator when the
/// denominator magnitude falls below 1e-14 (a repeated root, impossible
/// for 0 < nu < 1).
std::pair<double, double> residue_coefficients(const OscillatorParams& p,
                                               const Pole& pole);

/// Branch-cut integrand along the negative real axis, R > 0:
///   (lambda/pi) * [(R x0 - x1) sin(nu pi) + (x0/R)(R^2+omega^2) sin(pi(nu-1))]
///   * e^(-R t) R^nu / [(R^2+omega^2)^2 + 2 lambda R^nu (R^2+omega^2) cos(nu pi)
///                      + (lambda R^nu)^2].
double decay_integrand(double R, double t, const OscillatorParams& p);

/// Same value with the numerator collapsed to -sin(nu pi)(x1 + x0 omega^2 / R);
/// identical analytically (sin(pi(nu-1)) = -sin(pi nu)) and free of the
/// large-R cancellation of the two-term form. Used by the quadrature.
double decay_integrand_simplified(double R, double t, const OscillatorParams& p);

struct DecayResult {
    double value;
    double error_estimate;
    int subdivisions;
};

/// Integral of the branch-cut integrand over R in (0, inf), 0 < nu < 1.
/// The R^(nu-1) endpoint singularity is removed by substituting u = R^nu on
/// [0, max(1, omega)]; the tail is summed over doubling octaves until its
/// contribution drops below tolerance (the integrand is O(R^(nu-3)), so the
/// octave series is geometric even at t = 0). Each piece uses adaptive
/// Gauss-Kronrod halving against cfg; throws QuadratureNonConvergence when
/// the shared subdivision budget runs out.
DecayResult decay_function_detail(double t, const OscillatorParams& p,
                                  const DecayQuadratureConfig& cfg = {});

double decay_function(double t, const OscillatorParams& p,
                      const DecayQuadratureConfig& cfg = {});

/// Pole and residue coefficients computed once, reusable across times.
/// Handles the full order range: nu in (0,1) uses the residue/branch-cut
/// form, nu = 1 the classical solution, nu = 0 the un-damped oscillator
/// with frequency sqrt(lambda + omega^2).
class PreparedSolution {
public:
    explicit PreparedSolution(const OscillatorParams& p);

    /// e^(beta t)(A cos + B sin) part (the whole solution at nu in {0, 1}).
    double oscillatory(double t) const;
    /// Branch-cut decay value; identically 0 at nu in {0, 1}.
    double decay(double t, const DecayQuadratureConfig& cfg = {}) const;
    /// oscillatory(t) - decay(t).
    double value(double t, const DecayQuadratureConfig& cfg = {}) const;

    const OscillatorParams& params() const noexcept { return params_; }
    /// Present only for nu in (0, 1).
    const std::optional<Pole>& pole() const noexcept { return pole_; }
    double a_coef() const noexcept { return a_; }
    double b_coef() const noexcept { return b_; }
    double beta() const noexcept { return beta_; }
    double sigma() const noexcept { return sigma_; }

private:
    enum class Mode { Interior, Classical, Undamped };

    OscillatorParams params_;
    Mode mode_;
    std::optional<Pole> pole_;
    double a_ = 0.0;
    double b_ = 0.0;
    double beta_ = 0.0;
    double sigma_ = 0.0;
};

/// x(t) at a single time; accepts the whole range 0 <= nu <= 1, routing the
/// endpoints to their limit forms. At nu = 0 the reported motion is
/// x0 cos(Omega t) + (x1/Omega) sin(Omega t) with Omega = sqrt(lambda+omega^2);
/// see the README note on the constant-offset ambiguity of that limit.
double evaluate(double t, const OscillatorParams& p,
                const DecayQuadratureConfig& cfg = {});

/// Solution pieces over a time grid; requires nu in (0, 1).
SolutionParts solution_parts(const OscillatorParams& p,
                             std::span<const double> times,
                             const DecayQuadratureConfig& cfg = {});

}  // namespace fracdamp::analytic
