#include "percap/replica.hpp"

#include <algorithm>
#include <cmath>

#include "percap/quadrature.hpp"
#include "percap/specfun.hpp"

namespace percap::replica {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr double kNegInf = -specfun::kInf;
// Terms this far (in log) below the running maximum cannot move the sum
// at double precision.
constexpr double kLogDrop = 46.0;

// log-sum-exp accumulator for nonnegative terms given by their logs.
struct LogSum {
    double m = kNegInf;
    double s = 0.0;

    void add(double l) {
        if (l == kNegInf) return;
        if (l > m) {
            s = s * std::exp(m - l) + 1.0;
            m = l;
        } else {
            s += std::exp(l - m);
        }
    }
    double log_value() const {
        return (m == kNegInf || s <= 0.0) ? kNegInf : m + std::log(s);
    }
};

// Signed variant: terms are sgn * exp(l).
struct SignedLogSum {
    double m = kNegInf;
    double s = 0.0;

    void add(double l, double sgn) {
        if (l == kNegInf || sgn == 0.0) return;
        if (l > m) {
            s = s * std::exp(m - l) + sgn;
            m = l;
        } else {
            s += sgn * std::exp(l - m);
        }
    }
    double max_log() const { return m; }
    double value() const {
        return m == kNegInf ? 0.0 : s * std::exp(m);
    }
    // (log |value|, sign)
    std::pair<double, double> log_abs() const {
        if (m == kNegInf || s == 0.0) return {kNegInf, 0.0};
        return {m + std::log(std::abs(s)), s > 0.0 ? 1.0 : -1.0};
    }
};

struct IntervalGeometry {
    double a;      // lambda sqrt(q) omega, the phase shift
    double scale;  // lambda sqrt(1-q), the z-unit width divisor
    long k0;       // interval index nearest to z = 0

    double eps1(long k) const { return (2.0 * k * M_PI - a) / scale; }
    double eps2(long k) const { return ((2.0 * k + 1.0) * M_PI - a) / scale; }
};

IntervalGeometry geometry(const ReplicaPoint& pt) {
    IntervalGeometry g;
    g.a = pt.lambda * std::sqrt(pt.q) * pt.omega;
    g.scale = pt.lambda * std::sqrt(1.0 - pt.q);
    g.k0 = static_cast<long>(std::floor(g.a / (2.0 * M_PI)));
    return g;
}

// Walks interval indices outward from k0 in both directions, feeding each
// k to `emit` (which returns the log-magnitude of what it added), until
// terms fall kLogDrop below the running maximum.
template <class Emit>
void walk_intervals(const IntervalGeometry& g, const SeriesConfig& cfg,
                    Emit&& emit) {
    if (cfg.k_max > 0) {
        for (long k = g.k0 - cfg.k_max; k <= g.k0 + cfg.k_max; ++k) emit(k);
        return;
    }
    double best = emit(g.k0);
    constexpr long kHardCap = 1'000'000;
    for (int dir : {+1, -1}) {
        for (long step = 1; step < kHardCap; ++step) {
            const double l = emit(g.k0 + dir * step);
            best = std::max(best, l);
            if (l < best - kLogDrop) break;
        }
    }
}

double phase(const ReplicaPoint& pt) {
    return pt.lambda * std::sqrt(pt.q) * pt.omega;
}

// Smallest series order past which the theta-series term bound (supplied
// by `bound`, eventually decreasing in m) stays below tol.
template <class Bound>
long series_order(Bound&& bound, double tol, double decay) {
    constexpr long kCap = 10'000'000;
    for (long m = 0; m < kCap; ++m) {
        // Past the Gaussian peak the bound decreases monotonically.
        if (decay * (2.0 * m + 1.0) * (2.0 * m + 1.0) > 1.0 && bound(m) < tol)
            return m;
    }
    throw TruncationError("theta series needs more than 1e7 terms");
}

int omega_panels(double lambda, double q, double cut) {
    // Initial panel width no wider than a quarter of the omega-period so
    // the adaptive pass cannot step over a whole oscillation.
    const double period = 2.0 * M_PI / (std::sqrt(std::max(q, 1e-12)) * lambda);
    const double n = std::ceil(8.0 * cut / period);
    return static_cast<int>(std::clamp(n, 16.0, 4096.0));
}

}  // namespace

void ReplicaPoint::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("ReplicaPoint: lambda must be > 0");
    if (!(q >= 0.0 && q < 1.0))
        throw std::invalid_argument("ReplicaPoint: q must be in [0, 1)");
    if (!std::isfinite(omega))
        throw std::invalid_argument("ReplicaPoint: omega must be finite");
}

double log_psi_interval(const ReplicaPoint& pt, const SeriesConfig& cfg) {
    pt.validate();
    const IntervalGeometry g = geometry(pt);
    LogSum acc;
    walk_intervals(g, cfg, [&](long k) {
        const double l = specfun::log_gauss_mass(g.eps1(k), g.eps2(k));
        acc.add(l);
        return l;
    });
    return acc.log_value();
}

double psi_interval(const ReplicaPoint& pt, const SeriesConfig& cfg) {
    return std::exp(log_psi_interval(pt, cfg));
}

double psi_series(const ReplicaPoint& pt, const SeriesConfig& cfg) {
    pt.validate();
    const double decay = 0.5 * (1.0 - pt.q) * pt.lambda * pt.lambda;
    long m_max = cfg.m_max;
    if (m_max <= 0) {
        m_max = series_order(
            [&](long m) {
                const double u = 2.0 * m + 1.0;
                return (2.0 / M_PI) * std::exp(-decay * u * u) / u;
            },
            cfg.quad_tol, decay);
    }
    const double arg = phase(pt);
    double sum = 0.0;
    for (long m = m_max; m >= 0; --m) {  // small terms first
        const double u = 2.0 * m + 1.0;
        sum += std::exp(-decay * u * u) * std::sin(u * arg) / u;
    }
    return 0.5 + (2.0 / M_PI) * sum;
}

double psi(const ReplicaPoint& pt, const SeriesConfig& cfg) {
    if (pt.q <= 0.5 || pt.lambda >= 20.0) return psi_series(pt, cfg);
    return psi_interval(pt, cfg);
}

double phi_series(const ReplicaPoint& pt, const SeriesConfig& cfg) {
    pt.validate();
    if (pt.q == 0.0)
        throw std::domain_error("phi_series: q = 0 (1/sqrt(q) singularity)");
    const double lam = pt.lambda;
    const double decay = 0.5 * (1.0 - pt.q) * lam * lam;
    const double cos_coef = lam * pt.omega / std::sqrt(pt.q);
    long m_max = cfg.m_max;
    if (m_max <= 0) {
        m_max = series_order(
            [&](long m) {
                const double u = 2.0 * m + 1.0;
                return std::exp(-decay * u * u) *
                       (lam * lam * u + std::abs(cos_coef)) / M_PI;
            },
            cfg.quad_tol, decay);
    }
    const double arg = phase(pt);
    double sum = 0.0;
    for (long m = m_max; m >= 0; --m) {
        const double u = 2.0 * m + 1.0;
        sum += std::exp(-decay * u * u) *
               (lam * lam * u * std::sin(u * arg) +
                cos_coef * std::cos(u * arg));
    }
    return sum / M_PI;
}

namespace {

// Accumulates the interval-form Phi: for each interval the two endpoint
// terms pdf(eps) * d(eps)/dq, evaluated in log space.
SignedLogSum phi_interval_sum(const ReplicaPoint& pt, const SeriesConfig& cfg) {
    const IntervalGeometry g = geometry(pt);
    const double lam = pt.lambda;
    const double sq = std::sqrt(pt.q);
    const double denom = 2.0 * lam * sq * std::pow(1.0 - pt.q, 1.5);
    SignedLogSum acc;
    auto endpoint = [&](double c, double sgn) {
        const double eps = (c * M_PI - g.a) / g.scale;
        const double coef = (-pt.omega * lam + c * M_PI * sq) / denom;
        if (coef == 0.0) return kNegInf;
        const double l = -0.5 * eps * eps - kLogSqrt2Pi + std::log(std::abs(coef));
        acc.add(l, sgn * (coef > 0.0 ? 1.0 : -1.0));
        return l;
    };
    walk_intervals(g, cfg, [&](long k) {
        const double l2 = endpoint(2.0 * k + 1.0, +1.0);
        const double l1 = endpoint(2.0 * k, -1.0);
        return std::max(l1, l2);
    });
    return acc;
}

}  // namespace

double phi_interval(const ReplicaPoint& pt, const SeriesConfig& cfg) {
    pt.validate();
    if (pt.q == 0.0)
        throw std::domain_error("phi_interval: q = 0");
    return phi_interval_sum(pt, cfg).value();
}

double phi_over_psi(const ReplicaPoint& pt, const SeriesConfig& cfg) {
    pt.validate();
    if (pt.q == 0.0)
        throw std::domain_error("phi_over_psi: q = 0");
    // No psi_floor clamp here: the log of Psi stays finite and accurate
    // long after Psi itself underflows, and the ratio needs it exact.
    const double lpsi = log_psi_interval(pt, cfg);
    const auto [lphi, sgn] = phi_interval_sum(pt, cfg).log_abs();
    if (sgn == 0.0) return 0.0;
    return sgn * std::exp(lphi - lpsi);
}

double free_energy_G(double lambda, double alpha, double q,
                     const SeriesConfig& cfg) {
    if (!(lambda > 0.0)) throw std::invalid_argument("free_energy_G: lambda > 0");
    if (!(alpha >= 0.0)) throw std::invalid_argument("free_energy_G: alpha >= 0");
    if (!(q >= 0.0 && q < 1.0))
        throw std::invalid_argument("free_energy_G: q in [0, 1)");
    const double entropy = 0.5 * (q / (1.0 - q) + std::log1p(-q));
    if (alpha == 0.0) return entropy;
    double energy;
    if (q == 0.0) {
        // The interval bounds lose omega at q = 0: the integral collapses.
        energy = std::log(psi({lambda, 0.0, 0.0}, cfg));
    } else {
        const double lfloor = std::log(cfg.psi_floor);
        auto integrand = [&](double w) {
            const double lp =
                std::max(log_psi_interval({lambda, q, w}, cfg), lfloor);
            return specfun::gauss_pdf(w) * lp;
        };
        energy = quad::integrate(integrand, -cfg.omega_cut, cfg.omega_cut,
                                 cfg.quad_tol, omega_panels(lambda, q, cfg.omega_cut),
                                 cfg.quad_tol);
    }
    return alpha * energy + entropy;
}

double alpha_of_q(double lambda, double q, const SeriesConfig& cfg) {
    if (!(lambda > 0.0)) throw std::invalid_argument("alpha_of_q: lambda > 0");
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("alpha_of_q: q in (0, 1)");
    auto integrand = [&](double w) {
        return specfun::gauss_pdf(w) * phi_over_psi({lambda, q, w}, cfg);
    };
    const double integral =
        quad::integrate(integrand, -cfg.omega_cut, cfg.omega_cut, cfg.quad_tol,
                        omega_panels(lambda, q, cfg.omega_cut), 1e-9);
    if (integral >= 0.0)
        throw SignViolationError("alpha_of_q: Int Dw Phi/Psi >= 0");
    const double r = 1.0 - q;
    return -q / (2.0 * r * r * integral);
}

std::vector<double> saddle_roots(double lambda, double alpha,
                                 const SeriesConfig& cfg) {
    if (!(lambda > 0.0) || !(alpha > 0.0))
        throw std::invalid_argument("saddle_roots: lambda > 0 and alpha > 0");
    auto g = [&](double q) { return alpha_of_q(lambda, q, cfg) - alpha; };

    double q_lo = 0.05, q_hi = 0.95;
    double g_lo = g(q_lo), g_hi = g(q_hi);
    while (g_lo > 0.0 && q_lo > 1e-6) {
        q_lo *= 0.25;
        g_lo = g(q_lo);
    }
    if (g_lo > 0.0)
        throw NoBracketError("saddle_roots: alpha below alpha(lambda, q) range (q -> 0)", false);
    while (g_hi < 0.0 && 1.0 - q_hi > 1e-7) {
        q_hi = 1.0 - 0.25 * (1.0 - q_hi);
        g_hi = g(q_hi);
    }
    if (g_hi < 0.0)
        throw NoBracketError("saddle_roots: alpha above alpha(lambda, q) range (q -> 1, at/over capacity)", true);

    // Coarse scan so multiple extrema, if any, are all reported.
    constexpr int kScan = 16;
    std::vector<std::pair<double, double>> brackets;
    double prev_q = q_lo, prev_g = g_lo;
    for (int i = 1; i <= kScan; ++i) {
        const double qi =
            i == kScan ? q_hi : q_lo + (q_hi - q_lo) * i / double(kScan);
        const double gi = i == kScan ? g_hi : g(qi);
        if (prev_g <= 0.0 && gi > 0.0) brackets.emplace_back(prev_q, qi);
        prev_q = qi;
        prev_g = gi;
    }
    if (brackets.empty()) brackets.emplace_back(q_lo, q_hi);

    std::vector<double> roots;
    for (auto [lo, hi] : brackets) {
        while (hi - lo > 1e-10) {
            const double mid = 0.5 * (lo + hi);
            (g(mid) <= 0.0 ? lo : hi) = mid;
        }
        roots.push_back(0.5 * (lo + hi));
    }
    return roots;
}

double saddle_q(double lambda, double alpha, const SeriesConfig& cfg) {
    return saddle_roots(lambda, alpha, cfg).front();
}

}  // namespace percap::replica
