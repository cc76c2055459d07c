#include "percap/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace percap::specfun {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

// cot(pi z), computed from exp(2 i pi z) on the side of the plane where
// the exponential decays.
cplx cot_pi(cplx z) {
    if (z.imag() < 0.0) return std::conj(cot_pi(std::conj(z)));
    const cplx w = std::exp(cplx(0.0, 2.0 * M_PI) * z);
    return cplx(0.0, 1.0) * (w + 1.0) / (w - 1.0);
}

// Asymptotic series, valid for |z| >= 10 with Re z > 0:
// psi(z) ~ ln z - 1/(2z) - sum_n B_{2n} / (2n z^{2n}).
cplx digamma_asymptotic(cplx z) {
    // B_{2n}/(2n) for n = 1..8.
    static const double coeff[8] = {
        1.0 / 12.0,    -1.0 / 120.0,    1.0 / 252.0,   -1.0 / 240.0,
        1.0 / 132.0,   -691.0 / 32760.0, 1.0 / 12.0,   -3617.0 / 8160.0,
    };
    const cplx inv2 = 1.0 / (z * z);
    cplx sum = 0.0;
    cplx pow = inv2;
    for (double c : coeff) {
        sum += c * pow;
        pow *= inv2;
    }
    return std::log(z) - 0.5 / z - sum;
}

}  // namespace

double gauss_pdf(double z) { return std::exp(-0.5 * z * z - kLogSqrt2Pi); }

double erf(double z) { return std::erf(z); }
double erfc(double z) { return std::erfc(z); }

double gauss_tail(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double log_gauss_tail(double x) {
    // erfc underflows near x ~ 37.5; switch to the Mills-ratio expansion
    // well before that.
    if (x < 26.0) return std::log(gauss_tail(x));
    const double ix2 = 1.0 / (x * x);
    const double series = 1.0 + ix2 * (-1.0 + ix2 * (3.0 + ix2 * (-15.0 + ix2 * 105.0)));
    return -0.5 * x * x - std::log(x) - kLogSqrt2Pi + std::log(series);
}

double gauss_mass(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi))
        throw std::invalid_argument("gauss_mass: NaN bound");
    if (lo > hi) throw std::invalid_argument("gauss_mass: lo > hi");
    if (lo == hi) return 0.0;
    // Reflect so the interval sits toward the upper tail; then the result
    // is a difference of same-signed upper-tail masses with the larger
    // one first.
    if (lo + hi < 0.0) return gauss_mass(-hi, -lo);
    const double m = gauss_tail(lo) - gauss_tail(hi);
    return m < 0.0 ? 0.0 : m;
}

double gauss_mass(const GaussInterval& iv) { return gauss_mass(iv.lo, iv.hi); }

double log_gauss_mass(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi))
        throw std::invalid_argument("log_gauss_mass: NaN bound");
    if (lo >= hi) return -kInf;
    if (lo + hi < 0.0) return log_gauss_mass(-hi, -lo);
    if (lo <= 0.0) return std::log(gauss_mass(lo, hi));
    const double la = log_gauss_tail(lo);
    if (hi == kInf) return la;
    const double lb = log_gauss_tail(hi);
    return la + std::log1p(-std::exp(lb - la));
}

cplx digamma(cplx z) {
    if (std::isnan(z.real()) || std::isnan(z.imag()))
        throw std::invalid_argument("digamma: NaN argument");
    if (is_nonpositive_integer(z))
        throw std::domain_error("digamma: pole at nonpositive integer");
    // Reflection keeps the recurrence short for arguments far to the left.
    if (z.real() < 0.5)
        return digamma(1.0 - z) - M_PI * cot_pi(z);
    cplx shift = 0.0;
    while (std::abs(z) < 10.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    return digamma_asymptotic(z) + shift;
}

double log_sphere_surface(int n) {
    if (n < 1) throw std::invalid_argument("log_sphere_surface: N >= 1");
    const double nd = n;
    return std::log(2.0) + 0.5 * nd * std::log(M_PI) +
           0.5 * (nd - 1.0) * std::log(nd) - std::lgamma(0.5 * nd);
}

}  // namespace percap::specfun
