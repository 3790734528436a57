#include <cmath>
#include <random>

#include "doctest.h"
#include "fracdamp/format.hpp"
#include "fracdamp/model.hpp"

using namespace fracdamp;

TEST_CASE("validate accepts the reference parameter set") {
    const auto p = OscillatorParams::validate(1, 1, 0.5, 1, 0);
    CHECK(p.lambda() == 1.0);
    CHECK(p.omega() == 1.0);
    CHECK(p.nu() == 0.5);
    CHECK(p.x0() == 1.0);
    CHECK(p.x1() == 0.0);
}

TEST_CASE("validate names the offending field") {
    CHECK_THROWS_WITH_AS(OscillatorParams::validate(-1, 1, 0.5, 1, 0),
                         doctest::Contains("lambda"), ValidationError);
    try {
        OscillatorParams::validate(-1, 1, 0.5, 1, 0);
    } catch (const ValidationError& e) {
        CHECK(e.issue() == ValidationIssue::NonPositiveLambda);
    }
    try {
        OscillatorParams::validate(0, 1, 0.5, 1, 0);
    } catch (const ValidationError& e) {
        CHECK(e.issue() == ValidationIssue::NonPositiveLambda);
    }
    try {
        OscillatorParams::validate(1, -2, 0.5, 1, 0);
    } catch (const ValidationError& e) {
        CHECK(e.issue() == ValidationIssue::NonPositiveOmega);
    }
    try {
        OscillatorParams::validate(1, 1, 1.5, 1, 0);
    } catch (const ValidationError& e) {
        CHECK(e.issue() == ValidationIssue::NuOutOfRange);
    }
    CHECK_THROWS_AS(OscillatorParams::validate(1, 1, -0.1, 1, 0), ValidationError);
    const double nan = std::nan("");
    CHECK_THROWS_AS(OscillatorParams::validate(nan, 1, 0.5, 1, 0), ValidationError);
    CHECK_THROWS_AS(OscillatorParams::validate(1, 1, nan, 1, 0), ValidationError);
    CHECK_THROWS_AS(
        OscillatorParams::validate(std::numeric_limits<double>::infinity(), 1, 0.5, 1, 0),
        ValidationError);
}

TEST_CASE("order endpoints are accepted") {
    CHECK_NOTHROW(OscillatorParams::validate(1, 1, 0.0, 1, 0));
    CHECK_NOTHROW(OscillatorParams::validate(1, 1, 1.0, 1, 0));
}

TEST_CASE("serialization round-trips bit-exactly") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double lambda = std::exp(14.0 * (u(rng) - 0.5));
        const double omega = std::exp(14.0 * (u(rng) - 0.5));
        const double nu = u(rng);
        const double x0 = 20.0 * (u(rng) - 0.5);
        const double x1 = (u(rng) - 0.5) / 3.0;
        const auto p = OscillatorParams::validate(lambda, omega, nu, x0, x1);

        const auto q = OscillatorParams::from_kv(p.to_kv());
        CHECK(q.lambda() == lambda);
        CHECK(q.omega() == omega);
        CHECK(q.nu() == nu);
        CHECK(q.x0() == x0);
        CHECK(q.x1() == x1);

        const auto c = OscillatorParams::from_csv_row(p.to_csv_row());
        CHECK(c.lambda() == lambda);
        CHECK(c.omega() == omega);
        CHECK(c.nu() == nu);
        CHECK(c.x0() == x0);
        CHECK(c.x1() == x1);
    }
}

TEST_CASE("kv parser rejects malformed input") {
    CHECK_THROWS_AS(OscillatorParams::from_kv("lambda=1\n"), ParseError);
    CHECK_THROWS_AS(OscillatorParams::from_kv("bogus=1\n"), ParseError);
    CHECK_THROWS_AS(
        OscillatorParams::from_kv("lambda=1\nlambda=2\nomega=1\nnu=0.5\nx0=1\nx1=0\n"),
        ParseError);
    CHECK_THROWS_AS(OscillatorParams::from_csv_row("1,2,0.5,1"), ParseError);
    CHECK_THROWS_AS(OscillatorParams::from_csv_row("1,2,0.5,1,0,9"), ParseError);
    CHECK_THROWS_AS(OscillatorParams::from_csv_row("1,2,zebra,1,0"), ParseError);
}

TEST_CASE("format_double is shortest and round-trips") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(parse_double(format_double(0.1)) == 0.1);
    CHECK(parse_double(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(parse_number("15/16") == 0.9375);
    CHECK(parse_number("0.25") == 0.25);
    CHECK_THROWS_AS(parse_number("1/0"), ParseError);
    CHECK_THROWS_AS(parse_double("12x"), ParseError);
}

TEST_CASE("nine-case classification is a pure function of lambda and omega") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double lambda = 0.05 + 4.0 * u(rng);
        const double omega = 0.05 + 4.0 * u(rng);
        const NineCase base = NineCase::from(lambda, omega);
        for (double nu : {0.0, 0.3, 0.7, 1.0}) {
            const auto p = OscillatorParams::validate(lambda, omega, nu, u(rng), u(rng));
            CHECK(NineCase::from(p.lambda(), p.omega()) == base);
        }
    }
}

TEST_CASE("classification boundaries use the documented tolerance") {
    CHECK(NineCase::from(15.0 / 16.0, 0.25).initial_slope == InitialSlope::Flat);
    CHECK(NineCase::from(15.0 / 16.0 + 5e-13, 0.25).initial_slope == InitialSlope::Flat);
    CHECK(NineCase::from(15.0 / 16.0 + 1e-11, 0.25).initial_slope ==
          InitialSlope::Increasing);
    CHECK(NineCase::from(15.0 / 16.0 - 1e-11, 0.25).initial_slope ==
          InitialSlope::Decreasing);

    CHECK(NineCase::from(2.0, 1.0).terminal == TerminalDamping::CriticallyDamped);
    CHECK(NineCase::from(2.0 + 5e-13, 1.0).terminal == TerminalDamping::CriticallyDamped);
    CHECK(NineCase::from(2.0 + 1e-11, 1.0).terminal == TerminalDamping::OverDamped);
    CHECK(NineCase::from(2.0 - 1e-11, 1.0).terminal == TerminalDamping::UnderDamped);

    CHECK(NineCase::from(2.0, 1.0).label() == "increasing-critical");
}

TEST_CASE("pole factories enforce the second quadrant and stay consistent") {
    CHECK_THROWS_AS(Pole::from_cartesian(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(Pole::from_cartesian(-0.5, -1.0), DomainError);
    CHECK_THROWS_AS(Pole::from_polar(1.0, 0.3), DomainError);
    CHECK_THROWS_AS(Pole::from_polar(-1.0, 2.0), DomainError);

    const Pole a = Pole::from_cartesian(-0.5, std::sqrt(3.0) / 2.0);
    CHECK(a.r == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(a.theta == doctest::Approx(2.0 * 3.141592653589793 / 3.0).epsilon(1e-14));

    const Pole b = Pole::from_polar(a.r, a.theta);
    CHECK(b.beta == doctest::Approx(a.beta).epsilon(1e-12));
    CHECK(b.sigma == doctest::Approx(a.sigma).epsilon(1e-12));
}

TEST_CASE("trajectory invariant is enforced") {
    const auto p = OscillatorParams::validate(1, 1, 0.5, 1, 0);
    Trajectory good{{{0.0, 1.0}, {0.5, 0.9}, {1.0, 0.7}}, TrajectorySource::Oracle, p, 0.5};
    CHECK_NOTHROW(good.check());

    Trajectory late{{{0.1, 1.0}, {0.5, 0.9}}, TrajectorySource::Oracle, p, 0.4};
    CHECK_THROWS_AS(late.check(), DomainError);

    Trajectory unsorted{{{0.0, 1.0}, {0.5, 0.9}, {0.5, 0.7}}, TrajectorySource::Oracle, p, 0.5};
    CHECK_THROWS_AS(unsorted.check(), DomainError);

    Trajectory empty{{}, TrajectorySource::Analytic, p, 0.0};
    CHECK_THROWS_AS(empty.check(), DomainError);
}
