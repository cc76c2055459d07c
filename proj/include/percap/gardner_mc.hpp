#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "percap/quantum.hpp"

// Monte Carlo estimation of the oscillatory Gardner volume at finite N:
// hit-or-miss sampling of sphere weights against the sinusoidal
// classification constraints. All randomness is counter-based per sample,
// so results are identical across worker counts.
namespace percap::mc {

/// p binary patterns in {-1,+1}^N with +-1 labels.
struct PatternSet {
    int N = 0;
    int p = 0;
    Eigen::MatrixXi patterns;  // p x N
    Eigen::VectorXi labels;    // p
};

struct VolumeEstimate {
    double fraction;  // in [0, 1]
    double stderr_;   // sqrt(fraction (1 - fraction) / samples)
    long samples;
    std::uint64_t seed;
};

/// Stateless 64-bit mixer used to derive all per-sample streams.
std::uint64_t mix64(std::uint64_t v);

/// i.i.d. uniform +-1 patterns and labels, deterministic given seed.
PatternSet sample_patterns(int N, int p, std::uint64_t seed);

/// Isotropic weight on the sphere |w|^2 = N.
quantum::WeightVector sample_sphere_weight(int N, std::uint64_t seed);

/// true iff xi^mu sin(lambda (w . x^mu) / |w|) > 0 for every mu
/// (kappa = 0; ties count as violations).
bool satisfies_all(const quantum::WeightVector& w, const PatternSet& ps,
                   double lambda);

/// Hit-or-miss volume estimate over `samples` sphere weights. Sample i
/// uses the stream derived from (seed, i); `threads` = 0 picks the
/// hardware count. Result is identical for any thread count.
VolumeEstimate estimate_volume(const PatternSet& ps, double lambda,
                               long samples, std::uint64_t seed,
                               int threads = 0);

struct ScanRow {
    double alpha;
    int p;
    double frac_positive;     // fraction of trials with a nonzero estimate
    double mean_log_nonzero;  // mean ln(fraction) over nonzero estimates
    double q25, q50, q75;     // quartiles of the per-trial fractions
};

/// For each alpha: p = round(alpha N) patterns, `trials` independent
/// pattern sets, a volume estimate each.
std::vector<ScanRow> capacity_scan(int N, double lambda,
                                   const std::vector<double>& alpha_grid,
                                   int trials, long samples,
                                   std::uint64_t seed, int threads = 0);

}  // namespace percap::mc
