#pragma once

#include <vector>

#include "percap/replica.hpp"

// Closed-form storage capacities: the classical alpha_c(kappa) and the
// oscillatory alpha_c(lambda), with certified truncation and the q -> 1
// consistency check against the saddle-point relation.
namespace percap::capacity {

/// Sampled alpha_c(lambda) curve with central-difference derivative.
struct CapacityCurve {
    std::vector<double> lambdas;         // strictly increasing
    std::vector<double> alpha_c;         // >= 2
    std::vector<double> dalpha_dlambda;  // central differences
    std::vector<int> truncation_k;       // terms used per point
};

/// Classical capacity alpha_c(kappa) = 1 / Int_{-kappa}^{inf} Dy (kappa+y)^2,
/// evaluated from the analytic antiderivative (erf and Gaussian pieces).
double classical_alpha_c(double kappa);

struct DenomResult {
    double value;  // in (0, 1/2]
    int k_used;    // number of series terms summed
};

/// Denominator of the oscillatory capacity:
/// sum_{k>=0} Int_0^{2pi/lambda} Dw w^2 exp(-(w + 2 pi k / lambda)^2 / 2),
/// each term in closed form; summation stops when the Gaussian tail bound
/// of the remainder drops below tol.
DenomResult capacity_denominator(double lambda, double tol = 1e-12);

/// alpha_c(lambda) = 1 / capacity_denominator; exactly 2 at lambda = 0.
double alpha_c(double lambda, double tol = 1e-12);

/// alpha_c over a strictly increasing grid, derivative by central
/// differences (one-sided at the ends).
CapacityCurve capacity_curve(const std::vector<double>& lambda_grid,
                             double tol = 1e-12);

struct LimitCheck {
    double extrapolated;  // q -> 1 extrapolation of alpha(lambda, q)
    double closed_form;   // alpha_c(lambda)
    double rel_gap;
};

/// Evaluates alpha_of_q on q_list (increasing toward 1), Richardson-
/// extrapolates in (1 - q), and compares with the closed form.
LimitCheck alpha_q_limit_check(double lambda, const std::vector<double>& q_list,
                               const replica::SeriesConfig& cfg = {});

}  // namespace percap::capacity
