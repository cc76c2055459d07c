#include "percap/capacity.hpp"

#include <cmath>
#include <stdexcept>

#include "percap/specfun.hpp"

namespace percap::capacity {

namespace {

using specfun::gauss_mass;
using specfun::gauss_pdf;
using specfun::gauss_tail;
using specfun::kInf;

// Int_lo^hi (t - c)^2 pdf(t) dt via the antiderivatives
// Int pdf = Phi, Int t pdf = -pdf, Int t^2 pdf = Phi - t pdf.
double second_moment_shifted(double c, double lo, double hi) {
    const double pdf_lo = gauss_pdf(lo);
    const double pdf_hi = std::isfinite(hi) ? gauss_pdf(hi) : 0.0;
    const double hi_pdf_hi = std::isfinite(hi) ? hi * pdf_hi : 0.0;
    const double mass = gauss_mass(lo, hi);
    return (1.0 + c * c) * mass - (hi_pdf_hi - lo * pdf_lo) +
           2.0 * c * (pdf_hi - pdf_lo);
}

}  // namespace

double classical_alpha_c(double kappa) {
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("classical_alpha_c: kappa >= 0 and finite");
    // Int_{-kappa}^{inf} (kappa + y)^2 pdf(y) dy
    //   = (1 + kappa^2) P(y > -kappa) + kappa pdf(kappa).
    const double denom =
        (1.0 + kappa * kappa) * gauss_tail(-kappa) + kappa * gauss_pdf(kappa);
    return 1.0 / denom;
}

DenomResult capacity_denominator(double lambda, double tol) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("capacity_denominator: lambda > 0");
    if (!(tol > 0.0))
        throw std::invalid_argument("capacity_denominator: tol > 0");
    const double period = 2.0 * M_PI / lambda;
    double sum = 0.0;
    int k = 0;
    for (;; ++k) {
        const double c = k * period;
        // Term k is Int_0^period w^2 pdf(w + c) dw, shifted to t = w + c.
        sum += second_moment_shifted(c, c, c + period);
        // w^2 <= period^2 on every remaining term, so the remainder is
        // bounded by period^2 * P(t > (k+1) period).
        if (period * period * gauss_tail((k + 1) * period) < tol) break;
        if (k > 100'000'000)
            throw std::runtime_error("capacity_denominator: truncation failed");
    }
    return {sum, k + 1};
}

double alpha_c(double lambda, double tol) {
    if (!(lambda >= 0.0))
        throw std::invalid_argument("alpha_c: lambda >= 0");
    if (lambda == 0.0) return 2.0;  // classical limit, exact
    return 1.0 / capacity_denominator(lambda, tol).value;
}

CapacityCurve capacity_curve(const std::vector<double>& lambda_grid,
                             double tol) {
    if (lambda_grid.empty())
        throw std::invalid_argument("capacity_curve: empty grid");
    for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
        if (lambda_grid[i] < 0.0)
            throw std::invalid_argument("capacity_curve: lambda >= 0");
        if (i > 0 && lambda_grid[i] <= lambda_grid[i - 1])
            throw std::invalid_argument("capacity_curve: grid must increase");
    }
    CapacityCurve curve;
    curve.lambdas = lambda_grid;
    for (double lam : lambda_grid) {
        if (lam == 0.0) {
            curve.alpha_c.push_back(2.0);
            curve.truncation_k.push_back(0);
        } else {
            const DenomResult d = capacity_denominator(lam, tol);
            curve.alpha_c.push_back(1.0 / d.value);
            curve.truncation_k.push_back(d.k_used);
        }
    }
    const std::size_t n = lambda_grid.size();
    curve.dalpha_dlambda.resize(n, 0.0);
    if (n >= 2) {
        auto slope = [&](std::size_t i, std::size_t j) {
            return (curve.alpha_c[j] - curve.alpha_c[i]) /
                   (curve.lambdas[j] - curve.lambdas[i]);
        };
        curve.dalpha_dlambda[0] = slope(0, 1);
        curve.dalpha_dlambda[n - 1] = slope(n - 2, n - 1);
        for (std::size_t i = 1; i + 1 < n; ++i)
            curve.dalpha_dlambda[i] = slope(i - 1, i + 1);
    }
    return curve;
}

LimitCheck alpha_q_limit_check(double lambda, const std::vector<double>& q_list,
                               const replica::SeriesConfig& cfg) {
    if (q_list.size() < 2)
        throw std::invalid_argument("alpha_q_limit_check: need >= 2 q values");
    for (std::size_t i = 0; i < q_list.size(); ++i) {
        if (!(q_list[i] > 0.0 && q_list[i] < 1.0))
            throw std::invalid_argument("alpha_q_limit_check: q in (0, 1)");
        if (i > 0 && q_list[i] <= q_list[i - 1])
            throw std::invalid_argument("alpha_q_limit_check: q_list increasing");
    }
    const std::size_t n = q_list.size();
    std::vector<double> h(n), val(n);
    for (std::size_t i = 0; i < n; ++i) {
        h[i] = 1.0 - q_list[i];
        val[i] = replica::alpha_of_q(lambda, q_list[i], cfg);
    }
    // Neville extrapolation of alpha(h) to h = 0.
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = 0; i + level < n; ++i)
            val[i] = (h[i + level] * val[i] - h[i] * val[i + 1]) /
                     (h[i + level] - h[i]);
    LimitCheck out;
    out.extrapolated = val[0];
    out.closed_form = alpha_c(lambda);
    out.rel_gap = std::abs(out.extrapolated - out.closed_form) / out.closed_form;
    return out;
}

}  // namespace percap::capacity
