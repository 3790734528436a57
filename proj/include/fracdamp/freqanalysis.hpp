#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "fracdamp/model.hpp"

namespace fracdamp::freqanalysis {

/// One point of a frequency-vs-order sweep.
struct SweepRow {
    double nu;
    double sigma;
    double beta;
    double r;
    double theta;
};

/// Implicit derivative of the pole with respect to the order:
///   ds/dnu = -lambda * s^nu * ln(s) * s / (2 s^2 + lambda * nu * s^nu),
/// principal log; dsigma/dnu is the imaginary part. Throws
/// DegenerateDenominator as residue_coefficients does.
std::complex<double> ds_dnu(const Pole& pole, const OscillatorParams& p);

/// dsigma/dnu at nu = 0: lambda * ln(lambda + omega^2) / (4 sqrt(lambda + omega^2)).
double initial_slope(double lambda, double omega);

/// Nine-case label from the two sign comparisons (tolerance kClassifyTol).
NineCase classify(double lambda, double omega);
NineCase classify(const OscillatorParams& p);

/// sigma(nu) sweep: one row per grid value (strictly inside (0,1), strictly
/// increasing) via the pole finder, warm-starting each solve at the previous
/// angle, plus analytically computed rows appended at nu = 0
/// (sigma = sqrt(lambda+omega^2)) and nu = 1 (classical regime: sigma =
/// sqrt(4 omega^2 - lambda^2)/2 under-damped, else 0 with beta at the real
/// root the pole collapses onto).
std::vector<SweepRow> sigma_sweep(double lambda, double omega,
                                  std::span<const double> nu_grid);

/// CSV with header "nu,sigma,beta,r,theta" after a "# ..." comment line,
/// shortest-repr decimals, LF endings.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows,
                     std::string_view comment);

}  // namespace fracdamp::freqanalysis
