#pragma once

#include <stdexcept>
#include <vector>

// Replica-symmetric objects for the oscillatory perceptron: the Gaussian
// interval-union weight Psi, its overlap derivative Phi, the free-energy
// functional G and the saddle-point load alpha(lambda, q).
namespace percap::replica {

/// Evaluation point (lambda, q, omega). lambda > 0, 0 <= q < 1.
struct ReplicaPoint {
    double lambda;
    double q;
    double omega;

    void validate() const;
};

/// Truncation orders and tolerances for the series and quadratures.
/// k_max / m_max of 0 mean "choose automatically from quad_tol".
struct SeriesConfig {
    int k_max = 0;
    long m_max = 0;
    double omega_cut = 10.0;
    double quad_tol = 1e-10;
    double psi_floor = 1e-300;
};

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The omega-integral of Phi/Psi came out nonnegative; alpha would not be
/// positive. Signals numerical breakdown, not a physical regime.
struct SignViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoBracketError : std::runtime_error {
    NoBracketError(const std::string& msg, bool over)
        : std::runtime_error(msg), over_capacity(over) {}
    /// true: alpha above the reachable range (q -> 1, at/over capacity);
    /// false: alpha below it (q -> 0 regime).
    bool over_capacity;
};

/// Psi as a sum of Gaussian interval masses over
/// [eps1(k), eps2(k)] = [(-l sqrt(q) w + 2k pi), (-l sqrt(q) w + (2k+1) pi)] / (l sqrt(1-q)).
double psi_interval(const ReplicaPoint& pt, const SeriesConfig& cfg = {});

/// ln of psi_interval, accurate far into the Gaussian tails where the
/// mass itself underflows.
double log_psi_interval(const ReplicaPoint& pt, const SeriesConfig& cfg = {});

/// Theta-series form:
/// Psi = 1/2 + (2/pi) sum_m exp(-(1-q) l^2 (2m+1)^2 / 2) sin((2m+1) l sqrt(q) w) / (2m+1).
/// Decays slowly as q -> 1; throws TruncationError past 1e7 terms.
double psi_series(const ReplicaPoint& pt, const SeriesConfig& cfg = {});

/// Representation dispatch: series for q <= 0.5 or lambda >= 20,
/// interval form otherwise.
double psi(const ReplicaPoint& pt, const SeriesConfig& cfg = {});

/// Phi = d Psi / dq, term-by-term derivative of the theta series.
/// Requires q > 0.
double phi_series(const ReplicaPoint& pt, const SeriesConfig& cfg = {});

/// Phi from the interval representation: endpoint Gaussian densities times
/// the q-derivatives of the interval bounds. Requires q > 0.
double phi_interval(const ReplicaPoint& pt, const SeriesConfig& cfg = {});

/// Phi/Psi evaluated in log space from the interval representation; stays
/// accurate where both factors underflow (q near 1, omega in a tail).
double phi_over_psi(const ReplicaPoint& pt, const SeriesConfig& cfg = {});

/// G(lambda, alpha, q) = alpha Int Dw ln Psi + (1/2)[q/(1-q) + ln(1-q)].
double free_energy_G(double lambda, double alpha, double q,
                     const SeriesConfig& cfg = {});

/// Saddle-point load alpha(lambda, q) = -q / (2 (1-q)^2 Int Dw Phi/Psi).
double alpha_of_q(double lambda, double q, const SeriesConfig& cfg = {});

/// All roots of alpha_of_q(lambda, q) = alpha found by a sign-change scan
/// plus bisection, tolerance 1e-10 in q.
std::vector<double> saddle_roots(double lambda, double alpha,
                                 const SeriesConfig& cfg = {});

/// The saddle overlap q* solving alpha_of_q(lambda, q) = alpha. Throws
/// NoBracketError when alpha lies outside the reachable range.
double saddle_q(double lambda, double alpha, const SeriesConfig& cfg = {});

}  // namespace percap::replica
