#include "percap/quantum.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace percap::quantum {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI(0.0, 1.0);

double dot(const WeightVector& w, const BinaryPattern& x) {
    if (w.w.size() != x.bits.size())
        throw std::invalid_argument("weight/pattern dimension mismatch");
    return w.w.dot(x.bits.cast<double>());
}

double heaviside(double v) { return v > 0.0 ? 1.0 : 0.0; }

}  // namespace

void BinaryPattern::validate() const {
    for (Eigen::Index i = 0; i < bits.size(); ++i)
        if (bits[i] != 1 && bits[i] != -1)
            throw std::invalid_argument("BinaryPattern: entries must be +-1");
}

WeightVector WeightVector::from(Eigen::VectorXd v) {
    const double n = v.norm();
    if (!(n > 0.0)) throw std::invalid_argument("WeightVector: zero norm");
    return {std::move(v), n};
}

const State& pauli(char axis) {
    static const State sx = (State() << 0, 1, 1, 0).finished();
    static const State sy = (State() << 0, -kI, kI, 0).finished();
    static const State sz = (State() << -1, 0, 0, 1).finished();
    switch (axis) {
        case 'x': return sx;
        case 'y': return sy;
        case 'z': return sz;
        default: throw std::invalid_argument("pauli: axis must be x, y or z");
    }
}

bool is_valid_state(const State& rho, double tol) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(rho.trace() - cplx(1.0)) > tol) return false;
    Eigen::SelfAdjointEigenSolver<State> es(rho);
    return es.eigenvalues().minCoeff() >= -tol;
}

State output_state_theta(const WeightVector& w, const BinaryPattern& x) {
    x.validate();
    const double t = heaviside(dot(w, x));
    State rho = State::Zero();
    rho(0, 0) = 1.0 - t;
    rho(1, 1) = t;
    return rho;
}

State output_state_lambda(const WeightVector& w, const BinaryPattern& x,
                          double lambda) {
    x.validate();
    if (lambda < 0.0)
        throw std::invalid_argument("output_state_lambda: lambda >= 0");
    const double theta = lambda * dot(w, x) / w.norm;
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    State rho;
    rho << c * c, c * s, c * s, s * s;
    return rho;
}

State full_circuit_output(const WeightVector& w, const BinaryPattern& x,
                          double lambda) {
    x.validate();
    const int n = static_cast<int>(x.bits.size());
    if (n > 12)
        throw std::invalid_argument("full_circuit_output: N <= 12");
    if (w.w.size() != n)
        throw std::invalid_argument("full_circuit_output: dimension mismatch");
    const long dim = 1L << n;
    // Register state psi(y, o): input basis string y, output qubit o.
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(dim, 2);
    long x_index = 0;
    for (int j = 0; j < n; ++j)
        if (x.bits[j] > 0) x_index |= 1L << j;
    psi(x_index, 0) = 1.0;  // |x> (x) |-1>

    // The unitary is block diagonal: per basis string y, a sigma_y rotation
    // of the output qubit by theta_y = lambda (w.y) / |w|.
    for (long y = 0; y < dim; ++y) {
        double wy = 0.0;
        for (int j = 0; j < n; ++j)
            wy += w.w[j] * (((y >> j) & 1L) ? 1.0 : -1.0);
        const double theta = lambda * wy / w.norm;
        const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
        const cplx a = psi(y, 0), b = psi(y, 1);
        psi(y, 0) = c * a - s * b;
        psi(y, 1) = s * a + c * b;
    }

    // Partial trace over the input register.
    State rho = State::Zero();
    for (long y = 0; y < dim; ++y)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                rho(a, b) += psi(y, a) * std::conj(psi(y, b));
    return rho;
}

double expect_pauli(const State& rho, char axis) {
    const cplx v = (rho * pauli(axis)).trace();
    if (std::abs(v.imag()) > 1e-12)
        throw std::runtime_error("expect_pauli: imaginary residue");
    return v.real();
}

State theta_gate_output_generic(const WeightVector& w, const BinaryPattern& x,
                                Activation f) {
    if (f != Activation::heaviside)
        throw std::invalid_argument("theta_gate_output_generic: unsupported activation");
    // arcsin(sqrt(Theta(v))) is 0 or pi/2, so the general gate reduces to
    // the projective Theta-gate output.
    return output_state_theta(w, x);
}

}  // namespace percap::quantum
