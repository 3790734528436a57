#include "fracdamp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fracdamp/errors.hpp"

namespace fracdamp::quadrature {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule. Odd indices of xgk
// (plus the center) are the Gauss abscissae.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;
    double error;
};

// QUADPACK-style 7/15 pair with the sharpened error estimate based on the
// scaled deviation integral resasc.
Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);

    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        const double fsum = f1 + f2;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    }

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double absh = std::abs(half);
    resabs *= absh;
    resasc *= absh;

    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));

    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double tiny = std::numeric_limits<double>::min();
    if (resabs > tiny / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);

    return Panel{a, b, resk * half, err};
}

}  // namespace

Result integrate(const std::function<double(double)>& f,
                 std::span<const double> breakpoints,
                 double rel_tol, double abs_tol, int& budget) {
    if (breakpoints.size() < 2)
        throw DomainError("integrate: need at least two breakpoints");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        if (!(breakpoints[i] > breakpoints[i - 1]))
            throw DomainError("integrate: breakpoints must be strictly ascending");

    std::vector<Panel> active;
    active.reserve(breakpoints.size() + 16);
    std::vector<Panel> frozen;  // panels too narrow to split further
    int used = 0;

    auto evaluate_panel = [&](double a, double b) -> Panel {
        if (budget <= 0)
            throw QuadratureNonConvergence("quadrature subdivision budget exhausted");
        --budget;
        ++used;
        return gk15(f, a, b);
    };

    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        Panel p = evaluate_panel(breakpoints[i - 1], breakpoints[i]);
        total += p.value;
        total_err += p.error;
        active.push_back(p);
    }

    auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::make_heap(active.begin(), active.end(), by_error);

    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (active.empty())
            throw QuadratureNonConvergence(
                "quadrature cannot refine further (intervals at floating-point width)");
        std::pop_heap(active.begin(), active.end(), by_error);
        Panel worst = active.back();
        active.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a) || !(mid < worst.b)) {
            frozen.push_back(worst);
            continue;
        }

        Panel left = evaluate_panel(worst.a, mid);
        Panel right = evaluate_panel(mid, worst.b);

        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;

        active.push_back(left);
        std::push_heap(active.begin(), active.end(), by_error);
        active.push_back(right);
        std::push_heap(active.begin(), active.end(), by_error);
    }

    return Result{total, total_err, used};
}

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol, int& budget) {
    const double pts[2] = {a, b};
    return integrate(f, std::span<const double>(pts, 2), rel_tol, abs_tol, budget);
}

}  // namespace fracdamp::quadrature
