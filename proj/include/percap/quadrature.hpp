#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace percap::quad {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1]: {node, G7 weight, K15 weight}.
inline constexpr double kGK15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
void gk15_panel(const F& f, double a, double b, double& k15, double& err) {
    const double mid = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double y0 = f(mid);
    double g7 = kGK15[0][1] * y0;
    double k = kGK15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kGK15[i][0];
        const double yi = f(mid + dx) + f(mid - dx);
        g7 += kGK15[i][1] * yi;
        k += kGK15[i][2] * yi;
    }
    k15 = k * h;
    err = std::abs((k - g7) * h);
}

/// Adaptive Gauss-Kronrod integration of f over [a, b]. `tol` is an
/// absolute target; `rel_floor` relaxes it to rel_floor * |integral| once
/// a global estimate is available, which keeps spiky integrands with
/// large absolute value tractable.
template <class F>
double integrate(const F& f, double a, double b, double tol,
                 int initial_panels = 8, double rel_floor = 0.0,
                 int max_panels = 2'000'000) {
    struct Panel {
        double a, b, val, err;
    };
    std::vector<Panel> work;
    work.reserve(256);
    double total = 0.0, total_err = 0.0;
    const double w = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        Panel p{a + i * w, a + (i + 1) * w, 0.0, 0.0};
        gk15_panel(f, p.a, p.b, p.val, p.err);
        total += p.val;
        total_err += p.err;
        work.push_back(p);
    }
    int used = initial_panels;
    while (true) {
        const double target = std::max(tol, rel_floor * std::abs(total));
        if (total_err <= target) break;
        if (used > max_panels)
            throw std::runtime_error("quad::integrate: no convergence");
        // Split the worst panel.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < work.size(); ++i)
            if (work[i].err > work[worst].err) worst = i;
        Panel p = work[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b)
            throw std::runtime_error("quad::integrate: panel underflow");
        Panel l{p.a, mid, 0.0, 0.0}, r{mid, p.b, 0.0, 0.0};
        gk15_panel(f, l.a, l.b, l.val, l.err);
        gk15_panel(f, r.a, r.b, r.val, r.err);
        total += l.val + r.val - p.val;
        total_err += l.err + r.err - p.err;
        work[worst] = l;
        work.push_back(r);
        used += 2;
    }
    return total;
}

}  // namespace percap::quad
