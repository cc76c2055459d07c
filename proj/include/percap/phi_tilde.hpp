#pragma once

#include <complex>

#include "percap/replica.hpp"

// Lorentzian/digamma approximation of Phi: the closed-form sum obtained by
// replacing each Gaussian factor of the interval-form Phi with a Lorentzian,
// plus its large-lambda asymptotic form. Diagnostic only: the capacity
// pipeline always uses the exact Phi.
namespace percap::phitilde {

using cplx = std::complex<double>;

/// The complex building blocks Z, W, C1, C2. For q < 1 the square root
/// sqrt(2 lambda^2 (q-1)) is taken as +i lambda sqrt(2 (1-q)) (principal
/// root of a negative real), so Z = conj(W) and C1 + C2 is real.
struct PhiTildeParts {
    cplx Z;
    cplx W;
    cplx C1;
    cplx C2;
};

PhiTildeParts parts(const replica::ReplicaPoint& pt);

/// The eight-digamma closed form
///   C1 [psi(1/2+Z) - psi(1+Z) + psi(-Z) - psi(1/2-Z)]
/// + C2 [psi(1/2+W) - psi(1/2-W) + psi(-W) - psi(1+W)].
/// The imaginary residue must stay below 1e-10 (1 + |result|); it is
/// checked and discarded.
double phi_tilde(const replica::ReplicaPoint& pt);

/// Large-lambda expansion of phi_tilde via psi(z) ~ ln z - 1/(2z), with
/// principal-branch logarithms. Documented validity lambda >= lambda_min.
/// Throws std::domain_error when a log argument's modulus falls below
/// 1e-8 (branch-cut proximity).
double phi_tilde_asymptotic(const replica::ReplicaPoint& pt,
                            double lambda_min = 20.0);

/// Lorentzian(k-term) - Gaussian(k-term) for the (2k+1) pi centered factor;
/// nonnegative since exp(-x) <= 1/(1+x) for x >= 0.
double lorentzian_gaussian_gap(const replica::ReplicaPoint& pt, int k);

}  // namespace percap::phitilde
