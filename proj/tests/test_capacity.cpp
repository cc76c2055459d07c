#include <doctest.h>

#include <cmath>
#include <vector>

#include "percap/capacity.hpp"
#include "percap/quadrature.hpp"
#include "percap/specfun.hpp"

using namespace percap;

namespace {

double std_normal(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
}

// Brute-force denominator: K terms, 1e6-node trapezoid each.
double denom_brute(double lambda, int K, long nodes) {
    const double L = 2.0 * M_PI / lambda;
    double sum = 0.0;
    for (int k = 0; k < K; ++k) {
        const double shift = 2.0 * M_PI * k / lambda;
        double acc = 0.0;
        const double h = L / nodes;
        for (long i = 0; i <= nodes; ++i) {
            const double w = i * h;
            const double f = w * w * std_normal(w + shift);
            acc += (i == 0 || i == nodes) ? 0.5 * f : f;
        }
        sum += acc * h;
    }
    return sum;
}

}  // namespace

TEST_CASE("classical_alpha_c") {
    CHECK(std::abs(capacity::classical_alpha_c(0.0) - 2.0) <= 1e-12);
    CHECK(capacity::classical_alpha_c(20.0) < 1e-2);
    // kappa=1 against an adaptive quadrature oracle of the defining
    // integral Int_{-1}^{inf} Dy (1+y)^2.
    const double I = quad::integrate(
        [](double y) { return (1.0 + y) * (1.0 + y) * std_normal(y); }, -1.0,
        40.0, 1e-14, 64);
    CHECK(std::abs(capacity::classical_alpha_c(1.0) - 1.0 / I) <= 1e-12);
    // Frozen mpmath value.
    CHECK(std::abs(capacity::classical_alpha_c(1.0) -
                   0.51957222960493796949) <= 1e-13);
    // Strictly decreasing in kappa.
    double prev = capacity::classical_alpha_c(0.0);
    for (double k = 0.25; k <= 5.0; k += 0.25) {
        const double v = capacity::classical_alpha_c(k);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("capacity_denominator") {
    // Classical limit: only the k=0 term survives.
    CHECK(std::abs(capacity::capacity_denominator(1e-3).value - 0.5) <= 1e-12);
    // Brute-force oracle at lambda=5 (K=200 terms, 1e6-node trapezoid).
    const double brute = denom_brute(5.0, 200, 1'000'000);
    CHECK(std::abs(capacity::capacity_denominator(5.0).value - brute) <=
          1e-10);
    // Frozen mpmath value.
    CHECK(std::abs(capacity::capacity_denominator(5.0).value -
                   0.19522830896890700186) <= 1e-12);
    // Upper bound 1/2 for every lambda.
    for (double lam : {1e-3, 0.1, 0.7, 1.0, 2.0, 5.0, 17.0, 300.0}) {
        const auto d = capacity::capacity_denominator(lam);
        CHECK(d.value > 0.0);
        CHECK(d.value <= 0.5 + 1e-12);
        CHECK(d.k_used >= 1);
    }
}

TEST_CASE("alpha_c values and bound") {
    CHECK(capacity::alpha_c(0.0) == 2.0);
    CHECK(std::abs(capacity::alpha_c(1e-3) - 2.0) <= 1e-9);
    CHECK(std::abs(capacity::alpha_c(1.0) - 2.0) < 0.05);
    // Frozen mpmath oracles.
    CHECK(capacity::alpha_c(1.0) ==
          doctest::Approx(2.000000027457221363).epsilon(1e-10));
    CHECK(capacity::alpha_c(5.0) ==
          doctest::Approx(5.1222079691284157098).epsilon(1e-10));
    CHECK(capacity::alpha_c(10.0) ==
          doctest::Approx(17.392812174373092359).epsilon(1e-9));
    CHECK(capacity::alpha_c(10.0) > capacity::alpha_c(5.0));
    CHECK(capacity::alpha_c(5.0) > 2.2);
    // Lower bound and monotonicity on a log grid.
    double prev = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double lam = std::pow(10.0, -3.0 + 6.0 * i / 199.0);
        const double a = capacity::alpha_c(lam);
        CHECK(a >= 2.0 - 1e-9);
        CHECK(a >= prev - 1e-9);
        prev = a;
    }
}

TEST_CASE("capacity_curve") {
    {
        const auto c = capacity::capacity_curve({0.0}, 1e-12);
        REQUIRE(c.alpha_c.size() == 1);
        CHECK(c.alpha_c[0] == 2.0);
    }
    {
        std::vector<double> grid;
        for (double l = 0.1; l <= 1.6 + 1e-12; l += 0.05) grid.push_back(l);
        const auto c = capacity::capacity_curve(grid, 1e-12);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(std::abs(c.dalpha_dlambda[i]) < 0.1);
            CHECK(std::abs(c.alpha_c[i] - 2.0) < 0.05);
        }
    }
    {
        std::vector<double> grid;
        for (double l = 2.0; l <= 10.0 + 1e-12; l += 0.5) grid.push_back(l);
        const auto c = capacity::capacity_curve(grid, 1e-12);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            CHECK(c.dalpha_dlambda[i] > 0.0);
            if (i > 0) CHECK(c.alpha_c[i] > c.alpha_c[i - 1]);
        }
    }
}

TEST_CASE("alpha_q_limit_check small lambda") {
    // In the classical regime the q->1 extrapolation reproduces the closed
    // form; at larger lambda the closed-form capacity departs from the
    // exact saddle limit (see the acceptance report and README).
    const std::vector<double> qs{0.99, 0.999, 0.9999};
    {
        const auto chk = capacity::alpha_q_limit_check(0.01, qs);
        CHECK(std::abs(chk.extrapolated - 2.0) < 0.04);
        CHECK(chk.rel_gap <= 0.02);
    }
    {
        const auto chk = capacity::alpha_q_limit_check(0.5, qs);
        CHECK(chk.closed_form == doctest::Approx(2.0).epsilon(1e-6));
        CHECK(chk.rel_gap <= 0.02);
    }
}
