#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "percap/quantum.hpp"

using namespace percap::quantum;
using cplx = std::complex<double>;

namespace {

WeightVector random_weight(int n, std::mt19937_64& eng) {
    std::normal_distribution<double> normal;
    Eigen::VectorXd v(n);
    for (int j = 0; j < n; ++j) v[j] = normal(eng);
    if (v.norm() == 0.0) v[0] = 1.0;
    return WeightVector::from(v);
}

BinaryPattern random_pattern(int n, std::mt19937_64& eng) {
    BinaryPattern x;
    x.bits.resize(n);
    for (int j = 0; j < n; ++j) x.bits[j] = (eng() & 1ULL) ? 1 : -1;
    return x;
}

// Matrix-exponential oracle: build the full 2^(N+1) x 2^(N+1) generator
// -(i/2)(lambda/|w|) (w . sigma_z^(xN)) (x) sigma_y, exponentiate with
// Eigen, apply to |x> (x) |-1>, partial-trace the input register.
State oracle_output(const WeightVector& w, const BinaryPattern& x,
                    double lambda) {
    const int n = int(w.w.size());
    const long dim = 1L << n;
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(2 * dim, 2 * dim);
    const State sy = pauli('y');
    for (long y = 0; y < dim; ++y) {
        double field = 0.0;
        for (int j = 0; j < n; ++j)
            field += ((y >> j) & 1L) ? w.w[j] : -w.w[j];
        const double theta = lambda * field / w.norm;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                H(2 * y + a, 2 * y + b) = -cplx(0.0, 0.5) * theta * sy(a, b);
    }
    const Eigen::MatrixXcd U = H.exp();
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(2 * dim);
    long xi = 0;
    for (int j = 0; j < n; ++j)
        if (x.bits[j] > 0) xi |= (1L << j);
    psi[2 * xi + 0] = 1.0;  // output qubit starts in |-1>
    psi = U * psi;
    State rho = State::Zero();
    for (long y = 0; y < dim; ++y)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                rho(a, b) += psi[2 * y + a] * std::conj(psi[2 * y + b]);
    return rho;
}

}  // namespace

TEST_CASE("pattern and weight validation") {
    BinaryPattern x;
    x.bits.resize(3);
    x.bits << 1, -1, 1;
    CHECK_NOTHROW(x.validate());
    x.bits[1] = 0;
    CHECK_THROWS_AS(x.validate(), std::invalid_argument);
    Eigen::VectorXd z = Eigen::VectorXd::Zero(4);
    CHECK_THROWS_AS((void)WeightVector::from(z), std::invalid_argument);
}

TEST_CASE("pauli matrices") {
    const State sx = pauli('x'), sy = pauli('y'), sz = pauli('z');
    // Basis ordering {|-1>, |+1>}: sigma_z = diag(-1, +1).
    CHECK(sz(0, 0) == cplx(-1.0, 0.0));
    CHECK(sz(1, 1) == cplx(1.0, 0.0));
    // sx and sy keep their standard matrices while sz is negated by the
    // {|-1>, |+1>} ordering, so the product picks up a sign: sx sy = -i sz.
    CHECK(((sx * sy) + cplx(0.0, 1.0) * sz).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((sx * sx - State::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((sy * sy - State::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("theta-gate output state") {
    std::mt19937_64 eng(21);
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + int(eng() % 7);
        const auto w = random_weight(n, eng);
        const auto x = random_pattern(n, eng);
        const State rho = output_state_theta(w, x);
        CHECK(is_valid_state(rho));
        const double dot = w.w.dot(x.bits.cast<double>());
        const double theta_step = dot > 0.0 ? 1.0 : 0.0;  // Theta(0)=0
        CHECK(std::abs(rho(1, 1).real() - theta_step) < 1e-15);
        CHECK(std::abs(rho(0, 1)) < 1e-15);
        // <sigma_z> = 2 Theta - 1 = sign of the field.
        CHECK(expect_pauli(rho, 'z') ==
              doctest::Approx(2.0 * theta_step - 1.0).epsilon(1e-14));
        // Generic-gate reduction agrees.
        const State gen = theta_gate_output_generic(w, x, Activation::heaviside);
        CHECK((gen - rho).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("lambda-gate closed form vs dense circuit, N=1 matrix exponential") {
    std::mt19937_64 eng(22);
    for (int i = 0; i < 30; ++i) {
        const auto w = random_weight(1, eng);
        const auto x = random_pattern(1, eng);
        const double lam = 0.1 + double(eng() % 1000) / 125.0;
        const State closed = output_state_lambda(w, x, lam);
        const State dense = full_circuit_output(w, x, lam);
        const State oracle = oracle_output(w, x, lam);
        CHECK((dense - oracle).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((closed - oracle).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("lambda-gate 200 random cases N<=8") {
    std::mt19937_64 eng(23);
    std::uniform_real_distribution<double> ulam(0.0, 8.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + int(eng() % 8);
        const auto w = random_weight(n, eng);
        const auto x = random_pattern(n, eng);
        const double lam = ulam(eng);
        const State dense = full_circuit_output(w, x, lam);
        const State closed = output_state_lambda(w, x, lam);
        worst = std::max(worst, (dense - closed).cwiseAbs().maxCoeff());
        CHECK(is_valid_state(dense, 1e-11));
        // Readout identities: theta = lambda (w.x)/|w|.
        const double theta = lam * w.w.dot(x.bits.cast<double>()) / w.norm;
        CHECK(std::abs(expect_pauli(dense, 'x') - std::sin(theta)) < 1e-12);
        CHECK(std::abs(expect_pauli(dense, 'z') + std::cos(theta)) < 1e-12);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("small-N oracle at N<=4 via matrix exponential") {
    std::mt19937_64 eng(24);
    std::uniform_real_distribution<double> ulam(0.0, 8.0);
    for (int i = 0; i < 25; ++i) {
        const int n = 2 + int(eng() % 3);
        const auto w = random_weight(n, eng);
        const auto x = random_pattern(n, eng);
        const double lam = ulam(eng);
        CHECK((full_circuit_output(w, x, lam) - oracle_output(w, x, lam))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
}

TEST_CASE("state validity checker") {
    State good;
    good << 0.5, 0.25, 0.25, 0.5;
    CHECK(is_valid_state(good));
    State nonherm;
    nonherm << 0.5, 0.3, -0.3, 0.5;
    CHECK_FALSE(is_valid_state(nonherm));
    State badtrace;
    badtrace << 0.9, 0.0, 0.0, 0.9;
    CHECK_FALSE(is_valid_state(badtrace));
    State notpsd;
    notpsd << 0.5, 0.7, 0.7, 0.5;
    CHECK_FALSE(is_valid_state(notpsd));
}
