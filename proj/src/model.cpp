#include "fracdamp/model.hpp"

#include <array>
#include <cmath>

#include "fracdamp/format.hpp"

namespace fracdamp {

OscillatorParams OscillatorParams::validate(double lambda, double omega, double nu,
                                            double x0, double x1) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw ValidationError(ValidationIssue::NonPositiveLambda,
                              "lambda must be a positive finite real, got " +
                                  format_double(lambda));
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw ValidationError(ValidationIssue::NonPositiveOmega,
                              "omega must be a positive finite real, got " +
                                  format_double(omega));
    if (!(nu >= 0.0 && nu <= 1.0))
        throw ValidationError(ValidationIssue::NuOutOfRange,
                              "nu must lie in [0, 1], got " + format_double(nu));
    return OscillatorParams(lambda, omega, nu, x0, x1);
}

namespace {

constexpr std::array<const char*, 5> kFields = {"lambda", "omega", "nu", "x0", "x1"};

OscillatorParams from_fields(const std::array<double, 5>& v) {
    return OscillatorParams::validate(v[0], v[1], v[2], v[3], v[4]);
}

}  // namespace

std::string OscillatorParams::to_kv() const {
    const std::array<double, 5> v = {lambda_, omega_, nu_, x0_, x1_};
    std::string out;
    for (std::size_t i = 0; i < kFields.size(); ++i) {
        out += kFields[i];
        out += '=';
        out += format_double(v[i]);
        out += '\n';
    }
    return out;
}

OscillatorParams OscillatorParams::from_kv(std::string_view text) {
    std::array<double, 5> v{};
    std::array<bool, 5> seen{};
    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = (eol == std::string_view::npos) ? std::string_view{} : text.substr(eol + 1);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected key=value, got '" + std::string(line) + "'");
        const std::string_view key = line.substr(0, eq);
        bool matched = false;
        for (std::size_t i = 0; i < kFields.size(); ++i) {
            if (key != kFields[i]) continue;
            if (seen[i]) throw ParseError("duplicate key '" + std::string(key) + "'");
            v[i] = parse_double(line.substr(eq + 1));
            seen[i] = true;
            matched = true;
            break;
        }
        if (!matched) throw ParseError("unknown key '" + std::string(key) + "'");
    }
    for (std::size_t i = 0; i < kFields.size(); ++i)
        if (!seen[i]) throw ParseError(std::string("missing key '") + kFields[i] + "'");
    return from_fields(v);
}

std::string OscillatorParams::to_csv_row() const {
    return format_double(lambda_) + ',' + format_double(omega_) + ',' +
           format_double(nu_) + ',' + format_double(x0_) + ',' + format_double(x1_);
}

OscillatorParams OscillatorParams::from_csv_row(std::string_view line) {
    std::array<double, 5> v{};
    std::size_t field = 0;
    while (true) {
        const auto comma = line.find(',');
        const std::string_view cell = line.substr(0, comma);
        if (field >= v.size()) throw ParseError("too many CSV fields");
        v[field++] = parse_double(cell);
        if (comma == std::string_view::npos) break;
        line = line.substr(comma + 1);
    }
    if (field != v.size()) throw ParseError("expected 5 CSV fields");
    return from_fields(v);
}

const char* to_string(InitialSlope s) noexcept {
    switch (s) {
        case InitialSlope::Increasing: return "Increasing";
        case InitialSlope::Flat: return "Flat";
        case InitialSlope::Decreasing: return "Decreasing";
    }
    return "?";
}

const char* to_string(TerminalDamping t) noexcept {
    switch (t) {
        case TerminalDamping::UnderDamped: return "UnderDamped";
        case TerminalDamping::CriticallyDamped: return "CriticallyDamped";
        case TerminalDamping::OverDamped: return "OverDamped";
    }
    return "?";
}

const char* to_string(TrajectorySource s) noexcept {
    switch (s) {
        case TrajectorySource::Analytic: return "analytic";
        case TrajectorySource::Oracle: return "oracle";
        case TrajectorySource::Classical: return "classical";
    }
    return "?";
}

NineCase NineCase::from(double lambda, double omega) {
    if (!(lambda > 0.0) || !(omega > 0.0))
        throw DomainError("classification requires lambda > 0 and omega > 0");
    const double d_slope = lambda + omega * omega - 1.0;
    const double d_damp = lambda - 2.0 * omega;
    NineCase c{};
    c.initial_slope = std::abs(d_slope) <= kClassifyTol
                          ? InitialSlope::Flat
                          : (d_slope > 0.0 ? InitialSlope::Increasing
                                           : InitialSlope::Decreasing);
    c.terminal = std::abs(d_damp) <= kClassifyTol
                     ? TerminalDamping::CriticallyDamped
                     : (d_damp > 0.0 ? TerminalDamping::OverDamped
                                     : TerminalDamping::UnderDamped);
    return c;
}

std::string NineCase::label() const {
    const char* a = initial_slope == InitialSlope::Increasing   ? "increasing"
                    : initial_slope == InitialSlope::Flat       ? "flat"
                                                                : "decreasing";
    const char* b = terminal == TerminalDamping::UnderDamped        ? "under"
                    : terminal == TerminalDamping::CriticallyDamped ? "critical"
                                                                    : "over";
    return std::string(a) + '-' + b;
}

Pole Pole::from_cartesian(double beta, double sigma) {
    if (!(beta < 0.0) || !(sigma > 0.0))
        throw DomainError("pole must lie in the open second quadrant (beta < 0, sigma > 0)");
    Pole p{};
    p.beta = beta;
    p.sigma = sigma;
    p.r = std::hypot(beta, sigma);
    p.theta = std::atan2(sigma, beta);
    return p;
}

Pole Pole::from_polar(double r, double theta) {
    constexpr double kHalfPi = 1.5707963267948966;
    constexpr double kPi = 3.141592653589793;
    if (!(r > 0.0) || !(theta > kHalfPi) || !(theta < kPi))
        throw DomainError("pole polar form requires r > 0 and pi/2 < theta < pi");
    Pole p{};
    p.r = r;
    p.theta = theta;
    p.beta = r * std::cos(theta);
    p.sigma = r * std::sin(theta);
    return p;
}

void Trajectory::check() const {
    if (samples.empty()) throw DomainError("trajectory has no samples");
    if (samples.front().t != 0.0)
        throw DomainError("trajectory must start at t = 0");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].t > samples[i - 1].t))
            throw DomainError("trajectory times must be strictly increasing");
}

}  // namespace fracdamp
