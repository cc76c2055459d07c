#pragma once

#include <Eigen/Core>
#include <complex>

// Exact small-N simulation of the discrete quantum perceptron circuit,
// used as a correctness oracle for the closed-form readout states.
//
// Basis ordering for the output qubit is {|-1>, |+1>} throughout, with
// sigma_z |-1> = -|-1>; the Pauli matrices below follow that ordering, so
// all off-diagonal signs are reproducible.
namespace percap::quantum {

using State = Eigen::Matrix2cd;  // readout density matrix in {|-1>, |+1>}

/// Input pattern with entries in {-1, +1}.
struct BinaryPattern {
    Eigen::VectorXi bits;

    void validate() const;
};

/// Real weight vector with cached Euclidean norm (> 0).
struct WeightVector {
    Eigen::VectorXd w;
    double norm;

    static WeightVector from(Eigen::VectorXd v);
};

enum class Activation { heaviside };

const State& pauli(char axis);  // 'x', 'y' or 'z'

/// Hermitian, unit trace, PSD within tol.
bool is_valid_state(const State& rho, double tol = 1e-12);

/// Theta-gate output: (1 - Theta(w.x)) |-1><-1| + Theta(w.x) |1><1|,
/// with Theta(0) = 0.
State output_state_theta(const WeightVector& w, const BinaryPattern& x);

/// Lambda-gate output in closed form, theta = lambda (w.x) / |w|:
/// diag(cos^2(theta/2), sin^2(theta/2)) with off-diagonal sin(theta)/2.
State output_state_lambda(const WeightVector& w, const BinaryPattern& x,
                          double lambda);

/// Dense 2^(N+1) circuit: prepares |x> (x) |-1>, applies the block-diagonal
/// unitary exp(-(i/2)(lambda/|w|) w.sigma_z (x) sigma_y), partial-traces
/// the input register. N <= 12.
State full_circuit_output(const WeightVector& w, const BinaryPattern& x,
                          double lambda);

/// tr(rho sigma_axis); the imaginary residue (<= 1e-12) is discarded.
double expect_pauli(const State& rho, char axis);

/// General-gate reduction: for the heaviside activation (zero bias, single
/// layer) the arcsin-sqrt gate reduces exactly to output_state_theta.
State theta_gate_output_generic(const WeightVector& w, const BinaryPattern& x,
                                Activation f);

}  // namespace percap::quantum
