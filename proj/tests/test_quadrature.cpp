#include <cmath>

#include "doctest.h"
#include "fracdamp/errors.hpp"
#include "fracdamp/quadrature.hpp"

using namespace fracdamp;

namespace {
quadrature::Result quad(const std::function<double(double)>& f, double a, double b,
                        double rel = 1e-12, double abs = 1e-14, int budget = 2000) {
    return quadrature::integrate(f, a, b, rel, abs, budget);
}
}  // namespace

TEST_CASE("polynomials and smooth integrands") {
    auto r = quad([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    r = quad([](double x) { return std::sin(x); }, 0.0, 3.141592653589793);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));

    r = quad([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
    CHECK(r.value == doctest::Approx(std::sqrt(3.141592653589793)).epsilon(1e-13));
}

TEST_CASE("error estimate bounds the true error") {
    const double truth = 2.0 / 3.0;  // integral of sqrt on [0,1] needs refinement
    int budget = 2000;
    auto r = quadrature::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0,
                                   1e-10, 1e-14, budget);
    CHECK(std::abs(r.value - truth) <= r.error * 10 + 1e-14);
    CHECK(std::abs(r.value - truth) <= 1e-9);
    CHECK(r.intervals > 1);

    // oscillatory with heavy cancellation: abs_tol governs
    int budget2 = 2000;
    auto osc = quadrature::integrate([](double x) { return std::sin(x); }, 0.0,
                                     20.0 * 3.141592653589793, 1e-12, 1e-10, budget2);
    CHECK(std::abs(osc.value) <= 1e-9);
}

TEST_CASE("seeded breakpoints are honored") {
    const double pts[4] = {0.0, 0.25, 0.5, 1.0};
    int budget = 100;
    auto r = quadrature::integrate([](double x) { return 3.0 * x * x; },
                                   std::span<const double>(pts, 4), 1e-12, 1e-14, budget);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.intervals >= 3);

    const double bad[3] = {0.0, 0.5, 0.5};
    int budget2 = 100;
    CHECK_THROWS_AS(quadrature::integrate([](double) { return 1.0; },
                                          std::span<const double>(bad, 3), 1e-12,
                                          1e-14, budget2),
                    DomainError);
}

TEST_CASE("exhausted budget raises non-convergence") {
    int budget = 4;
    CHECK_THROWS_AS(quadrature::integrate(
                        [](double x) { return std::sin(1.0 / (x + 1e-4)); }, 0.0, 1.0,
                        1e-14, 1e-16, budget),
                    QuadratureNonConvergence);
    CHECK(budget <= 0);
}

TEST_CASE("budget is shared across calls") {
    int budget = 40;
    auto a = quad([](double x) { return x; }, 0.0, 1.0);
    (void)a;
    int before = budget;
    quadrature::integrate([](double x) { return x * x * x; }, 0.0, 2.0, 1e-12, 1e-14,
                          budget);
    CHECK(budget < before);
}
