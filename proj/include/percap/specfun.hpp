#pragma once

#include <complex>
#include <limits>

// Scalar special functions and Gaussian-measure primitives shared by the
// replica and capacity modules.
namespace percap::specfun {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Half-open Gaussian integration interval in z-units. Infinite endpoints
/// are allowed; lo <= hi is required.
struct GaussInterval {
    double lo;
    double hi;
};

/// Standard normal density.
double gauss_pdf(double z);

/// Upper-tail mass Q(x) = P(Z > x) of a standard normal.
double gauss_tail(double x);

/// log Q(x), valid far into the tail where Q(x) underflows.
double log_gauss_tail(double x);

/// Mass of a standard Gaussian over [lo, hi]. Evaluated through erfc in
/// the direction of the smaller tail, so intervals deep in either tail
/// keep full relative accuracy.
double gauss_mass(const GaussInterval& iv);
double gauss_mass(double lo, double hi);

/// log of gauss_mass, usable where the mass itself underflows.
double log_gauss_mass(double lo, double hi);

/// Error function. Odd, |erf| <= 1.
double erf(double z);
double erfc(double z);

/// Digamma psi(z) for complex z. Poles at the nonpositive integers throw
/// std::domain_error. Reflection into Re z >= 1/2, upward recurrence into
/// |z| >= 10, then the Stirling-type asymptotic series with 8 terms.
cplx digamma(cplx z);

/// ln C_N for the surface measure of the sphere of radius sqrt(N):
/// ln 2 + (N/2) ln pi + ((N-1)/2) ln N - lnGamma(N/2).
double log_sphere_surface(int n);

}  // namespace percap::specfun
