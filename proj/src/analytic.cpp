#include "fracdamp/analytic.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fracdamp/format.hpp"
#include "fracdamp/polefinder.hpp"
#include "fracdamp/quadrature.hpp"

namespace fracdamp::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi*x) for x in [0,1] at full relative accuracy on both ends: the
// reflection argument 1-x is exact for x >= 0.5.
double sin_pi_unit(double x) {
    return x <= 0.5 ? std::sin(kPi * x) : std::sin(kPi * (1.0 - x));
}

// cos(pi*x) for x in [0,1]; reflection around 1/2 keeps the zero accurate.
double cos_pi_unit(double x) {
    return x < 0.25 ? std::cos(kPi * x) : std::sin(kPi * (0.5 - x));
}

// sin(pi*x)/(pi*x), safe against the removable singularity.
double sinc_pi_unit(double x) {
    if (x < 1e-8) return 1.0;
    return sin_pi_unit(x) / (kPi * x);
}

void check_time(double t) {
    if (!(t >= 0.0)) throw DomainError("time must be >= 0, got " + format_double(t));
}

void check_interior(double nu) {
    if (!(nu > 0.0 && nu < 1.0))
        throw DomainError("operation requires 0 < nu < 1, got " + format_double(nu));
}

double undamped_value(double t, const OscillatorParams& p) {
    const double freq = std::sqrt(p.lambda() + p.omega() * p.omega());
    return p.x0() * std::cos(freq * t) + p.x1() / freq * std::sin(freq * t);
}

}  // namespace

void DecayQuadratureConfig::check() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw DomainError("quadrature tolerances must be positive");
    if (max_subdivisions <= 0)
        throw DomainError("max_subdivisions must be positive");
}

const char* to_string(ClassicalCase c) noexcept {
    switch (c) {
        case ClassicalCase::Over: return "over-damped";
        case ClassicalCase::Critical: return "critically-damped";
        case ClassicalCase::Under: return "under-damped";
    }
    return "?";
}

ClassicalSolution classical_poles(double lambda, double omega) {
    if (!(lambda > 0.0) || !(omega > 0.0))
        throw DomainError("classical_poles requires lambda > 0 and omega > 0");
    ClassicalSolution out{};
    const double gap = lambda - 2.0 * omega;
    if (std::abs(gap) <= kClassifyTol) {
        out.kind = ClassicalCase::Critical;
        out.s3 = -0.5 * lambda;
    } else if (gap > 0.0) {
        out.kind = ClassicalCase::Over;
        const double root = std::sqrt(lambda * lambda - 4.0 * omega * omega);
        out.s1 = 0.5 * (-lambda + root);
        out.s2 = 0.5 * (-lambda - root);
    } else {
        out.kind = ClassicalCase::Under;
        out.alpha = 0.5 * lambda;
        out.rho = std::sqrt(omega * omega - 0.25 * lambda * lambda);
    }
    return out;
}

double classical_solve(double t, const OscillatorParams& p) {
    if (p.nu() != 1.0)
        throw DomainError("classical_solve requires nu == 1");
    check_time(t);
    const double lambda = p.lambda();
    const double omega = p.omega();
    const double x0 = p.x0();
    const double x1 = p.x1();
    const ClassicalSolution cs = classical_poles(lambda, omega);
    switch (cs.kind) {
        case ClassicalCase::Over:
            return std::exp(cs.s1 * t) * (cs.s1 * x0 + x1 + lambda * x0) /
                       (2.0 * cs.s1 + lambda) +
                   std::exp(cs.s2 * t) * (cs.s2 * x0 + x1 + lambda * x0) /
                       (2.0 * cs.s2 + lambda);
        case ClassicalCase::Critical:
            return std::exp(-omega * t) * (t * (omega * x0 + x1) + x0);
        case ClassicalCase::Under:
            return std::exp(-cs.alpha * t) *
                   (x0 * std::cos(cs.rho * t) +
                    (2.0 * x1 + lambda * x0) / (2.0 * cs.rho) * std::sin(cs.rho * t));
    }
    throw DomainError("unreachable classical case");
}

std::pair<double, double> residue_coefficients(const OscillatorParams& p,
                                               const Pole& pole) {
    check_interior(p.nu());
    const std::complex<double> s(pole.beta, pole.sigma);
    const std::complex<double> s_pow = std::pow(s, p.nu() - 1.0);
    const std::complex<double> denom = 2.0 * s + p.nu() * p.lambda() * s_pow;
    if (std::abs(denom) < 1e-14)
        throw DegenerateDenominator("repeated pole: |2s + nu*lambda*s^(nu-1)| = " +
                                    format_double(std::abs(denom)));
    const std::complex<double> c =
        (s * p.x0() + p.x1() + p.x0() * p.lambda() * s_pow) / denom;
    return {2.0 * c.real(), -2.0 * c.imag()};
}

double decay_integrand(double R, double t, const OscillatorParams& p) {
    if (!(R > 0.0)) throw DomainError("decay integrand requires R > 0");
    check_time(t);
    const double nu = p.nu();
    check_interior(nu);
    const double om2 = p.omega() * p.omega();
    const double rr = R * R + om2;
    const double r_nu = std::pow(R, nu);
    const double sin_npi = sin_pi_unit(nu);
    const double sin_nm1pi = std::sin(kPi * (nu - 1.0));
    const double numerator =
        (R * p.x0() - p.x1()) * sin_npi + p.x0() / R * rr * sin_nm1pi;
    const double denominator =
        rr * rr + 2.0 * p.lambda() * r_nu * rr * cos_pi_unit(nu) +
        (p.lambda() * r_nu) * (p.lambda() * r_nu);
    return p.lambda() / kPi * numerator * std::exp(-R * t) * r_nu / denominator;
}

double decay_integrand_simplified(double R, double t, const OscillatorParams& p) {
    if (!(R > 0.0)) throw DomainError("decay integrand requires R > 0");
    check_time(t);
    const double nu = p.nu();
    check_interior(nu);
    const double om2 = p.omega() * p.omega();
    const double rr = R * R + om2;
    const double r_nu = std::pow(R, nu);
    const double denominator =
        rr * rr + 2.0 * p.lambda() * r_nu * rr * cos_pi_unit(nu) +
        (p.lambda() * r_nu) * (p.lambda() * r_nu);
    return -p.lambda() / kPi * sin_pi_unit(nu) * (p.x1() + p.x0() * om2 / R) *
           std::exp(-R * t) * r_nu / denominator;
}

DecayResult decay_function_detail(double t, const OscillatorParams& p,
                                  const DecayQuadratureConfig& cfg) {
    cfg.check();
    check_time(t);
    const double nu = p.nu();
    check_interior(nu);
    if (p.x0() == 0.0 && p.x1() == 0.0) return {0.0, 0.0, 0};

    const double lambda = p.lambda();
    const double om2 = p.omega() * p.omega();
    const double cos_npi = cos_pi_unit(nu);
    const double snc = sinc_pi_unit(nu);
    const double split = std::max(1.0, p.omega());
    int budget = cfg.max_subdivisions;

    // Head piece on R in (0, split] after u = R^nu: the integrand is
    //   -(lambda * sin(nu pi)/(nu pi)) (x1 R + x0 omega^2) e^(-Rt) / D(u),
    // with D written in u so the R^nu and R^(2nu) terms stay exact even when
    // u^(1/nu) underflows (tiny nu pushes all representable R into a sliver
    // of u near split^nu; the underflow then only zeroes genuinely
    // negligible R-polynomial factors).
    const double inv_nu = 1.0 / nu;
    auto head = [&](double u) {
        const double R = u > 0.0 ? std::pow(u, inv_nu) : 0.0;
        const double rr = R * R + om2;
        const double den = rr * rr + 2.0 * lambda * u * rr * cos_npi +
                           lambda * lambda * u * u;
        return -lambda * snc * (p.x1() * R + p.x0() * om2) * std::exp(-R * t) / den;
    };

    // Breakpoints at u = (split * 2^-j)^nu seed one panel per octave of R,
    // which is exactly where the integrand varies.
    const double log_split = std::log(split);
    std::vector<double> bps;
    bps.reserve(62);
    bps.push_back(0.0);
    for (int j = 60; j >= 0; --j)
        bps.push_back(std::exp(nu * (log_split - j * std::numbers::ln2)));

    quadrature::Result head_res =
        quadrature::integrate(head, bps, cfg.rel_tol, cfg.abs_tol, budget);
    double value = head_res.value;
    double error = head_res.error;

    // Tail over doubling octaves. Per octave the integrand scale drops by
    // 2^(nu-3) and the width doubles, so contributions shrink at least
    // geometrically with ratio 2^(nu-2) <= 1/2 even at t = 0; two
    // consecutive octaves below half tolerance bound the remainder by the
    // tolerance itself.
    auto tail_f = [&](double R) { return decay_integrand_simplified(R, t, p); };
    double a = split;
    int quiet = 0;
    const int max_octaves = 220;
    int k = 0;
    for (; k < max_octaves; ++k) {
        const double b = 2.0 * a;
        quadrature::Result oct =
            quadrature::integrate(tail_f, a, b, cfg.rel_tol, cfg.abs_tol, budget);
        value += oct.value;
        error += oct.error;
        const double threshold =
            0.5 * std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
        if (std::abs(oct.value) + oct.error < threshold) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        a = b;
    }
    if (k >= max_octaves)
        throw QuadratureNonConvergence("decay tail did not fall below tolerance by R = " +
                                       format_double(a));
    error += 0.5 * std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));

    return {value, error, cfg.max_subdivisions - budget};
}

double decay_function(double t, const OscillatorParams& p,
                      const DecayQuadratureConfig& cfg) {
    return decay_function_detail(t, p, cfg).value;
}

PreparedSolution::PreparedSolution(const OscillatorParams& p) : params_(p) {
    const double nu = p.nu();
    if (nu == 0.0) {
        mode_ = Mode::Undamped;
        sigma_ = std::sqrt(p.lambda() + p.omega() * p.omega());
        beta_ = 0.0;
        a_ = p.x0();
        b_ = p.x1() / sigma_;
    } else if (nu == 1.0) {
        mode_ = Mode::Classical;
        const ClassicalSolution cs = classical_poles(p.lambda(), p.omega());
        if (cs.kind == ClassicalCase::Under) {
            beta_ = -cs.alpha;
            sigma_ = cs.rho;
            a_ = p.x0();
            b_ = (2.0 * p.x1() + p.lambda() * p.x0()) / (2.0 * cs.rho);
        }
    } else {
        mode_ = Mode::Interior;
        pole_ = polefinder::find_pole(p);
        const auto [a, b] = residue_coefficients(p, *pole_);
        a_ = a;
        b_ = b;
        beta_ = pole_->beta;
        sigma_ = pole_->sigma;
    }
}

double PreparedSolution::oscillatory(double t) const {
    check_time(t);
    switch (mode_) {
        case Mode::Undamped:
            return undamped_value(t, params_);
        case Mode::Classical:
            return classical_solve(t, params_);
        case Mode::Interior:
            return std::exp(beta_ * t) *
                   (a_ * std::cos(sigma_ * t) + b_ * std::sin(sigma_ * t));
    }
    return 0.0;
}

double PreparedSolution::decay(double t, const DecayQuadratureConfig& cfg) const {
    if (mode_ != Mode::Interior) {
        check_time(t);
        return 0.0;
    }
    return decay_function(t, params_, cfg);
}

double PreparedSolution::value(double t, const DecayQuadratureConfig& cfg) const {
    return oscillatory(t) - decay(t, cfg);
}

double evaluate(double t, const OscillatorParams& p,
                const DecayQuadratureConfig& cfg) {
    return PreparedSolution(p).value(t, cfg);
}

SolutionParts solution_parts(const OscillatorParams& p,
                             std::span<const double> times,
                             const DecayQuadratureConfig& cfg) {
    check_interior(p.nu());
    const PreparedSolution prep(p);
    SolutionParts parts{};
    parts.a_coef = prep.a_coef();
    parts.b_coef = prep.b_coef();
    parts.beta = prep.beta();
    parts.sigma = prep.sigma();
    parts.decay.reserve(times.size());
    for (double t : times) parts.decay.push_back(prep.decay(t, cfg));
    return parts;
}

}  // namespace fracdamp::analytic
