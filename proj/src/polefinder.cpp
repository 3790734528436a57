#include "fracdamp/polefinder.hpp"

#include <cmath>
#include <numbers>

#include "fracdamp/format.hpp"

namespace fracdamp::polefinder {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;

// The angular domain is parametrized internally by phi = theta - pi/2 in
// (0, phi_max). This keeps sin(2*theta) = -sin(2*phi) and
// sin((2-nu)*theta) = sin(nu*pi/2 - (2-nu)*phi) free of cancellation against
// pi, which matters when nu (and with it the domain width) is tiny.
double phi_max(double nu) noexcept { return kPi * nu / (2.0 * (2.0 - nu)); }

void check_order(double nu) {
    if (!(nu > 0.0 && nu <= 1.0))
        throw DomainError("angular equation requires 0 < nu <= 1, got " +
                          format_double(nu));
}

// log of the angular LHS at phi in the open domain:
//   [nu*log(sin(nu*theta)) - 2*log(sin(2*phi))]/(2-nu) + log(sin(nu*pi/2 - (2-nu)*phi))
double log_lhs_phi(double phi, double nu) {
    const double theta = kHalfPi + phi;
    const double s_nu = std::sin(nu * theta);
    const double s_2phi = std::sin(2.0 * phi);
    const double s_rem = std::sin(nu * kHalfPi - (2.0 - nu) * phi);
    return (nu * std::log(s_nu) - 2.0 * std::log(s_2phi)) / (2.0 - nu) +
           std::log(s_rem);
}

double log_r_phi(double phi, double nu, double lambda) {
    const double theta = kHalfPi + phi;
    return (std::log(lambda) + std::log(std::sin(nu * theta)) -
            std::log(std::sin(2.0 * phi))) /
           (2.0 - nu);
}

double to_phi_checked(double theta, double nu) {
    check_order(nu);
    if (!(theta > kHalfPi) || !(theta < theta_max(nu)))
        throw DomainError("theta = " + format_double(theta) +
                          " outside the open domain (pi/2, pi/(2-nu))");
    return theta - kHalfPi;
}

struct PhiBracket {
    double lo, hi, g_lo, g_hi;
};

// Sign-straddling bracket of the log residual g(phi) = log_lhs - rhs_log.
// The LHS spans (0, inf) on the domain, so in exact arithmetic any offsets
// straddle; the shrink loop only guards the floating endpoints.
PhiBracket bracket_phi(double nu, double rhs_log) {
    const double pmax = phi_max(nu);
    double offset = 1e-9;
    for (int attempt = 0; attempt <= 6; ++attempt, offset *= 0.1) {
        const double lo = offset;
        const double hi = pmax - offset;
        if (!(lo < hi)) continue;
        const double g_lo = log_lhs_phi(lo, nu) - rhs_log;
        const double g_hi = log_lhs_phi(hi, nu) - rhs_log;
        if (g_lo > 0.0 && g_hi < 0.0) return {lo, hi, g_lo, g_hi};
    }
    throw BracketFailure("no sign change of the angular residual for nu = " +
                         format_double(nu));
}

double bisect_phi(double lo, double hi, double nu, double rhs_log) {
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (log_lhs_phi(mid, nu) - rhs_log > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Pole pole_from_phi(double phi, const OscillatorParams& p) {
    const double nu = p.nu();
    const double r = std::exp(log_r_phi(phi, nu, p.lambda()));
    const double theta = kHalfPi + phi;
    std::complex<double> s = std::polar(r, theta);

    // Newton polish on the complex characteristic restores the accuracy the
    // theta parametrization alone cannot deliver in r and theta jointly.
    std::complex<double> best = s;
    double best_res = std::abs(characteristic(s, p));
    for (int it = 0; it < 5; ++it) {
        const std::complex<double> fval = characteristic(s, p);
        const std::complex<double> fder =
            2.0 * s + p.lambda() * nu * std::pow(s, nu - 1.0);
        if (!(std::abs(fder) > 0.0)) break;
        s -= fval / fder;
        if (!(s.imag() > 0.0) || !(s.real() < 0.0)) break;
        const double res = std::abs(characteristic(s, p));
        if (res < best_res) {
            best_res = res;
            best = s;
        }
        if (res == 0.0) break;
    }

    const double scale = std::max(p.omega() * p.omega(), std::norm(best));
    if (!(best_res <= 1e-10 * scale))
        throw BracketFailure("pole residual " + format_double(best_res) +
                             " above tolerance for nu = " + format_double(nu));
    return Pole::from_cartesian(best.real(), best.imag());
}

}  // namespace

std::complex<double> characteristic(std::complex<double> s, double lambda,
                                    double omega, double nu) {
    return s * s + lambda * std::pow(s, nu) + omega * omega;
}

std::complex<double> characteristic(std::complex<double> s,
                                    const OscillatorParams& p) {
    return characteristic(s, p.lambda(), p.omega(), p.nu());
}

double theta_max(double nu) noexcept { return kPi / (2.0 - nu); }

double angular_lhs_log(double theta, double nu) {
    return log_lhs_phi(to_phi_checked(theta, nu), nu);
}

double angular_lhs(double theta, double nu) {
    return std::exp(angular_lhs_log(theta, nu));
}

double angular_rhs_log(double lambda, double omega, double nu) {
    check_order(nu);
    if (!(lambda > 0.0) || !(omega > 0.0))
        throw DomainError("angular equation requires lambda > 0 and omega > 0");
    return 2.0 * std::log(omega) - 2.0 / (2.0 - nu) * std::log(lambda);
}

double r_from_theta(double theta, double nu, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("r_from_theta requires lambda > 0");
    return std::exp(log_r_phi(to_phi_checked(theta, nu), nu, lambda));
}

AngularBracket bracket_theta(double lambda, double omega, double nu) {
    check_order(nu);
    const double rhs = angular_rhs_log(lambda, omega, nu);
    const PhiBracket b = bracket_phi(nu, rhs);
    return AngularBracket{kHalfPi + b.lo, kHalfPi + b.hi, b.g_lo, b.g_hi};
}

Pole find_pole(const OscillatorParams& p) {
    const double nu = p.nu();
    if (!(nu > 0.0 && nu < 1.0))
        throw DomainError("find_pole handles 0 < nu < 1 only; the endpoints "
                          "have dedicated limit branches");
    const double rhs = angular_rhs_log(p.lambda(), p.omega(), nu);
    const PhiBracket b = bracket_phi(nu, rhs);
    const double phi = bisect_phi(b.lo, b.hi, nu, rhs);
    return pole_from_phi(phi, p);
}

Pole find_pole(const OscillatorParams& p, double theta_hint) {
    const double nu = p.nu();
    if (!(nu > 0.0 && nu < 1.0))
        throw DomainError("find_pole handles 0 < nu < 1 only; the endpoints "
                          "have dedicated limit branches");
    const double rhs = angular_rhs_log(p.lambda(), p.omega(), nu);
    const double pmax = phi_max(nu);
    const double hint = theta_hint - kHalfPi;

    // Continuity of the root in nu makes a window around the previous angle
    // a likely bracket; fall back to the full one when it is not.
    for (double width : {1e-3, 1e-2, 1e-1}) {
        const double lo = std::max(hint - width * pmax, pmax * 1e-12);
        const double hi = std::min(hint + width * pmax, pmax * (1.0 - 1e-12));
        if (!(lo < hi)) continue;
        const double g_lo = log_lhs_phi(lo, nu) - rhs;
        const double g_hi = log_lhs_phi(hi, nu) - rhs;
        if (g_lo > 0.0 && g_hi < 0.0)
            return pole_from_phi(bisect_phi(lo, hi, nu, rhs), p);
    }
    const PhiBracket b = bracket_phi(nu, rhs);
    return pole_from_phi(bisect_phi(b.lo, b.hi, nu, rhs), p);
}

}  // namespace fracdamp::polefinder
