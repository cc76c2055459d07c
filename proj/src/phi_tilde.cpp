#include "percap/phi_tilde.hpp"

#include <cmath>
#include <stdexcept>

#include "percap/specfun.hpp"

namespace percap::phitilde {

namespace {

void require_interior_q(const replica::ReplicaPoint& pt) {
    pt.validate();
    if (!(pt.q > 0.0 && pt.q < 1.0))
        throw std::invalid_argument("phi_tilde: q in (0, 1)");
}

}  // namespace

PhiTildeParts parts(const replica::ReplicaPoint& pt) {
    require_interior_q(pt);
    const double lam = pt.lambda;
    const double sq = std::sqrt(pt.q);
    const double r = 1.0 - pt.q;
    const cplx root(0.0, lam * std::sqrt(2.0 * r));  // sqrt(2 lam^2 (q-1))
    const double a = lam * sq * pt.omega;
    const double denom = 8.0 * M_PI * sq * std::sqrt(r);
    PhiTildeParts p;
    p.Z = (a - root) / (2.0 * M_PI);
    p.W = (a + root) / (2.0 * M_PI);
    p.C1 = (2.0 * sq * lam - pt.omega * root) / denom;
    p.C2 = (pt.omega * root + 2.0 * sq * lam) / denom;
    return p;
}

double phi_tilde(const replica::ReplicaPoint& pt) {
    const PhiTildeParts p = parts(pt);
    using specfun::digamma;
    const cplx value =
        p.C1 * (digamma(0.5 + p.Z) - digamma(1.0 + p.Z) + digamma(-p.Z) -
                digamma(0.5 - p.Z)) +
        p.C2 * (digamma(0.5 + p.W) - digamma(0.5 - p.W) + digamma(-p.W) -
                digamma(1.0 + p.W));
    if (std::abs(value.imag()) > 1e-10 * (1.0 + std::abs(value.real())))
        throw std::runtime_error("phi_tilde: imaginary residue too large");
    return value.real();
}

double phi_tilde_asymptotic(const replica::ReplicaPoint& pt,
                            double lambda_min) {
    const PhiTildeParts p = parts(pt);
    if (pt.lambda < lambda_min)
        throw std::domain_error("phi_tilde_asymptotic: lambda below validity");
    const double a = pt.lambda * std::sqrt(pt.q) * pt.omega;
    const cplx s(0.0, pt.lambda * std::sqrt(2.0 * (1.0 - pt.q)));
    const double pi = M_PI;
    const cplx args[8] = {
        pi - s + a,        2.0 * pi + a - s,  // C1, first log
        pi - a + s,        -a + s,            // C1, second log
        pi + a + s,        pi - a - s,        // C2, first log
        2.0 * pi + a + s,  -a - s,            // C2, second log
    };
    for (const cplx& z : args)
        if (std::abs(z) < 1e-8)
            throw std::domain_error("phi_tilde_asymptotic: branch-cut proximity");
    const cplx value =
        p.C1 * (std::log(args[0] / args[1]) - std::log(args[2] / args[3])) +
        p.C2 * (std::log(args[4] / args[5]) - std::log(args[6] / args[7]));
    return value.real();
}

double lorentzian_gaussian_gap(const replica::ReplicaPoint& pt, int k) {
    require_interior_q(pt);
    const double lam = pt.lambda;
    const double center = (2.0 * k + 1.0) * M_PI;
    const double u = center - lam * std::sqrt(pt.q) * pt.omega;
    const double x = u * u / (2.0 * lam * lam * (1.0 - pt.q));
    return 1.0 / (1.0 + x) - std::exp(-x);
}

}  // namespace percap::phitilde
