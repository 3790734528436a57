#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "fracdamp/polefinder.hpp"

using namespace fracdamp;
using doctest::Approx;

namespace {

constexpr double kPi = 3.141592653589793;

OscillatorParams params(double lambda, double omega, double nu) {
    return OscillatorParams::validate(lambda, omega, nu, 0.0, 0.0);
}

// Direct power-form evaluation of the angular equation, independent of the
// log-space implementation path.
double angular_lhs_direct(double theta, double nu) {
    const double s_nu = std::sin(nu * theta);
    const double s_2t = std::sin(2.0 * theta);
    return std::pow(std::pow(s_nu, nu) / (s_2t * s_2t), 1.0 / (2.0 - nu)) *
           std::sin((2.0 - nu) * theta);
}

// Dense-scan + bisection oracle: 1e6 uniform theta samples of the residual,
// then bisection of the unique sign change to 1e-14.
double scan_bisect_theta(double lambda, double omega, double nu) {
    const double rhs = std::pow(omega / std::pow(lambda, 1.0 / (2.0 - nu)), 2.0);
    const double lo = kPi / 2.0;
    const double width = kPi / (2.0 - nu) - lo;
    const int n = 1'000'000;
    double a = 0.0, b = 0.0;
    int changes = 0;
    double prev_theta = lo + width * 1.0 / (n + 1.0);
    double prev_res = angular_lhs_direct(prev_theta, nu) - rhs;
    for (int i = 2; i <= n; ++i) {
        const double theta = lo + width * i / (n + 1.0);
        const double res = angular_lhs_direct(theta, nu) - rhs;
        if ((res > 0.0) != (prev_res > 0.0)) {
            ++changes;
            a = prev_theta;
            b = theta;
        }
        prev_theta = theta;
        prev_res = res;
    }
    REQUIRE(changes == 1);
    while (b - a > 1e-14) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        if (angular_lhs_direct(mid, nu) - rhs > 0.0)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("angular equation closed form at nu = 1") {
    // reduces to 1/(4 cos^2 theta) there
    const double theta = 2.0 * kPi / 3.0;
    CHECK(polefinder::angular_lhs(theta, 1.0) == Approx(1.0).epsilon(1e-14));
    for (double th : {1.7, 2.0, 2.4, 3.0}) {
        const double c = std::cos(th);
        CHECK(polefinder::angular_lhs(th, 1.0) ==
              Approx(1.0 / (4.0 * c * c)).epsilon(1e-12));
    }
}

TEST_CASE("angular equation limits at the domain edges") {
    const double nu = 0.5;
    // vanishes at the upper edge
    double prev = 1e300;
    for (double off : {1e-3, 1e-5, 1e-7, 1e-9}) {
        const double v = polefinder::angular_lhs(polefinder::theta_max(nu) - off, nu);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev < 1e-8);
    // blows up monotonically at the lower edge
    prev = 0.0;
    for (double off : {1e-3, 1e-5, 1e-7, 1e-9}) {
        const double v = polefinder::angular_lhs(kPi / 2.0 + off, nu);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev > 1e10);
}

TEST_CASE("angular equation rejects angles off the open domain") {
    CHECK_THROWS_AS(polefinder::angular_lhs(kPi / 2.0, 0.5), DomainError);
    CHECK_THROWS_AS(polefinder::angular_lhs(polefinder::theta_max(0.5), 0.5), DomainError);
    CHECK_THROWS_AS(polefinder::angular_lhs(0.1, 0.5), DomainError);
    CHECK_THROWS_AS(polefinder::angular_lhs(3.1, 0.5), DomainError);
    CHECK_THROWS_AS(polefinder::angular_lhs(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(polefinder::angular_lhs(2.0, 1.5), DomainError);
    CHECK_THROWS_AS(polefinder::r_from_theta(2.0, 0.5, -1.0), DomainError);
}

TEST_CASE("radial factor matches its closed form and the two-equation oracle") {
    CHECK(polefinder::r_from_theta(2.0 * kPi / 3.0, 1.0, 1.0) == Approx(1.0).epsilon(1e-14));

    // lambda -> 0 collapses the radial factor
    CHECK(polefinder::r_from_theta(0.6 * kPi, 0.5, 1e-12) < 1e-7);

    // frozen oracle value for nu=0.5, lambda=1, theta=0.6*pi
    const double r = polefinder::r_from_theta(0.6 * kPi, 0.5, 1.0);
    CHECK(r == Approx(1.2373502190042135).epsilon(1e-14));

    // runtime bisection oracle on psi(r) = r^2 sin(2 theta) + lambda r^nu sin(nu theta)
    const double theta = 0.6 * kPi;
    auto psi = [&](double rr) {
        return rr * rr * std::sin(2.0 * theta) +
               std::pow(rr, 0.5) * std::sin(0.5 * theta);
    };
    double a = 1e-10, b = 100.0;
    REQUIRE(psi(a) > 0.0);
    REQUIRE(psi(b) < 0.0);
    for (int i = 0; i < 200 && b - a > 1e-15; ++i) {
        const double mid = 0.5 * (a + b);
        if (psi(mid) > 0.0)
            a = mid;
        else
            b = mid;
    }
    CHECK(r == Approx(0.5 * (a + b)).epsilon(1e-12));
}

TEST_CASE("find_pole rejects the order endpoints") {
    CHECK_THROWS_AS(polefinder::find_pole(params(1, 1, 0.0)), DomainError);
    CHECK_THROWS_AS(polefinder::find_pole(params(1, 1, 1.0)), DomainError);
}

TEST_CASE("find_pole matches the dense-scan oracle at nu=0.5, lambda=omega=1") {
    const Pole pole = polefinder::find_pole(params(1, 1, 0.5));

    // frozen 50-digit reference
    CHECK(pole.beta == Approx(-0.34381459720147702).epsilon(1e-13));
    CHECK(pole.sigma == Approx(1.3584345997286769).epsilon(1e-13));
    CHECK(pole.r == Approx(1.4012683679398549).epsilon(1e-13));
    CHECK(pole.theta == Approx(1.8186869046263929).epsilon(1e-13));

    // runtime oracle
    const double theta_star = scan_bisect_theta(1.0, 1.0, 0.5);
    CHECK(pole.theta == Approx(theta_star).epsilon(1e-12));
    const double r_star =
        std::pow(-std::sin(0.5 * theta_star) / std::sin(2.0 * theta_star), 1.0 / 1.5);
    CHECK(pole.r == Approx(r_star).epsilon(1e-12));
}

TEST_CASE("find_pole approaches the classical root as nu -> 1") {
    const Pole pole = polefinder::find_pole(params(1, 1, 1.0 - 1e-8));
    const std::complex<double> s(pole.beta, pole.sigma);
    const std::complex<double> classical(-0.5, std::sqrt(3.0) / 2.0);
    CHECK(std::abs(s - classical) < 1e-4);
}

TEST_CASE("tiny-order pole sits near i*sqrt(lambda+omega^2)") {
    const Pole pole = polefinder::find_pole(params(1, 1, 1e-9));
    CHECK(pole.sigma == Approx(std::sqrt(2.0)).epsilon(1e-6));
    CHECK(std::abs(pole.beta) < 1e-6);
}

TEST_CASE("pole satisfies both polar equations and conjugate symmetry") {
    for (double nu : {0.1, 0.3, 0.5, 0.7, 0.9})
        for (double lambda : {0.25, 1.0, 3.0})
            for (double omega : {0.5, 1.0, 2.0}) {
                const Pole p = polefinder::find_pole(params(lambda, omega, nu));
                const double scale = std::max(omega * omega, p.r * p.r);
                const double tol = 1e-10 * scale;

                const double real_eq = p.r * p.r * std::cos(2.0 * p.theta) +
                                       lambda * std::pow(p.r, nu) * std::cos(nu * p.theta) +
                                       omega * omega;
                const double imag_eq = p.r * p.r * std::sin(2.0 * p.theta) +
                                       lambda * std::pow(p.r, nu) * std::sin(nu * p.theta);
                CHECK(std::abs(real_eq) <= tol);
                CHECK(std::abs(imag_eq) <= tol);

                const std::complex<double> s(p.beta, p.sigma);
                CHECK(std::abs(polefinder::characteristic(s, lambda, omega, nu)) <= tol);
                CHECK(std::abs(polefinder::characteristic(std::conj(s), lambda, omega, nu)) <=
                      tol);

                CHECK(p.theta > kPi / 2.0);
                CHECK(p.theta < polefinder::theta_max(nu));
            }
}

TEST_CASE("angular LHS decreases strictly on dense grids") {
    for (double nu : {0.1, 0.5, 0.9}) {
        const double lo = kPi / 2.0;
        const double width = polefinder::theta_max(nu) - lo;
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= 10000; ++i) {
            const double v =
                polefinder::angular_lhs_log(lo + width * i / 10001.0, nu);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("monotonicity discriminant is nonnegative on the domain") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 20000; ++i) {
        const double nu = 0.001 + 0.998 * u(rng);
        const double theta =
            kPi / 2.0 + (polefinder::theta_max(nu) - kPi / 2.0) * u(rng);
        const double s2 = std::sin(2.0 * theta);
        const double sn = std::sin(nu * theta);
        const double q = nu * nu * s2 * s2 - 4.0 * nu * s2 * sn + 4.0 * sn * sn;
        CHECK(q >= 0.0);
    }
}

TEST_CASE("poles move continuously in nu") {
    for (auto [lambda, omega] : {std::pair{1.0, 1.0}, {3.0, 1.0}, {0.5, 0.125}}) {
        std::complex<double> prev_s;
        double prev_step_size = -1.0;
        for (int i = 1; i <= 999; ++i) {
            const double nu = i * 1e-3;
            const Pole p = polefinder::find_pole(params(lambda, omega, nu));
            const std::complex<double> s(p.beta, p.sigma);
            if (i > 1) {
                const double move = std::abs(s - prev_s);
                if (prev_step_size >= 0.0)
                    CHECK(move <= 100.0 * std::max(prev_step_size, 1e-5));
                prev_step_size = move;
            }
            prev_s = s;
        }
    }
}

TEST_CASE("warm-started solve agrees with the cold one") {
    double theta_prev = 0.0;
    bool have = false;
    for (int i = 1; i <= 19; ++i) {
        const double nu = 0.05 * i;
        const auto p = params(1.3, 0.8, nu);
        const Pole cold = polefinder::find_pole(p);
        if (have) {
            const Pole warm = polefinder::find_pole(p, theta_prev);
            CHECK(warm.theta == Approx(cold.theta).epsilon(1e-12));
            CHECK(warm.r == Approx(cold.r).epsilon(1e-12));
        }
        theta_prev = cold.theta;
        have = true;
    }
}

TEST_CASE("bracket endpoints straddle the root") {
    for (double nu : {0.05, 0.5, 0.95}) {
        const auto b = polefinder::bracket_theta(1.0, 1.0, nu);
        CHECK(b.lo > kPi / 2.0);
        CHECK(b.hi < polefinder::theta_max(nu));
        CHECK(b.lo < b.hi);
        CHECK(b.g_lo > 0.0);
        CHECK(b.g_hi < 0.0);
    }
}
