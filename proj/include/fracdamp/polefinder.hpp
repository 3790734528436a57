#pragma once

#include <complex>

#include "fracdamp/model.hpp"

namespace fracdamp::polefinder {

/// s^2 + lambda*s^nu + omega^2 with the principal branch of s^nu.
std::complex<double> characteristic(std::complex<double> s, double lambda,
                                    double omega, double nu);
std::complex<double> characteristic(std::complex<double> s,
                                    const OscillatorParams& p);

/// Upper edge pi/(2-nu) of the angular search domain (pi/2, pi/(2-nu)).
double theta_max(double nu) noexcept;

/// Left side of the reduced angular equation,
///   ((sin nu*theta)^nu / (sin 2theta)^2)^(1/(2-nu)) * sin((2-nu)*theta),
/// strictly positive and strictly decreasing on the open domain, blowing up
/// at pi/2+ and vanishing at pi/(2-nu)-. nu = 1 is admitted as the
/// continuous extension. Throws DomainError off the open domain.
double angular_lhs(double theta, double nu);

/// log of angular_lhs, evaluated without premature overflow near pi/2.
double angular_lhs_log(double theta, double nu);

/// log of the equation's right side (omega / lambda^(1/(2-nu)))^2.
double angular_rhs_log(double lambda, double omega, double nu);

/// Pole modulus for a given angle: (-lambda*sin(nu*theta)/sin(2*theta))^(1/(2-nu)).
/// sin(2*theta) < 0 on the domain, so the radicand is positive.
double r_from_theta(double theta, double nu, double lambda);

/// Sign-straddling bracket for the log residual angular_lhs_log - rhs_log.
/// lo/hi are angles, g_lo/g_hi the residuals there (g_lo > 0 > g_hi).
struct AngularBracket {
    double lo;
    double hi;
    double g_lo;
    double g_hi;
};

/// Endpoint offsets start at 1e-9 and shrink tenfold up to six times before
/// BracketFailure is declared.
AngularBracket bracket_theta(double lambda, double omega, double nu);

/// Locates the unique upper-half-plane pole for 0 < nu < 1 (strict):
/// bisection on the monotone angular equation to width 1e-14, then at most
/// five Newton steps on the complex characteristic to polish r and theta
/// jointly. The result satisfies |characteristic(s)| <= 1e-10 * max(omega^2, r^2).
Pole find_pole(const OscillatorParams& p);

/// Warm-started variant: tries a local bracket around theta_hint first
/// (useful for nu sweeps), falling back to the full bracket.
Pole find_pole(const OscillatorParams& p, double theta_hint);

}  // namespace fracdamp::polefinder
