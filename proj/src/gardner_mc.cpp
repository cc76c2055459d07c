#include "percap/gardner_mc.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <thread>

namespace percap::mc {

namespace {

std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1)));
}

Eigen::VectorXd gaussian_vector(int n, std::mt19937_64& eng) {
    std::normal_distribution<double> normal;
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal(eng);
    return v;
}

double quantile(const std::vector<double>& sorted, double prob) {
    if (sorted.empty()) return 0.0;
    const double pos = prob * (sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - lo;
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

std::uint64_t mix64(std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ULL;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    return v ^ (v >> 31);
}

PatternSet sample_patterns(int N, int p, std::uint64_t seed) {
    if (N < 1) throw std::invalid_argument("sample_patterns: N >= 1");
    if (p < 0) throw std::invalid_argument("sample_patterns: p >= 0");
    PatternSet ps;
    ps.N = N;
    ps.p = p;
    ps.patterns.resize(p, N);
    ps.labels.resize(p);
    auto eng = engine_for(seed, 0);
    for (int mu = 0; mu < p; ++mu) {
        for (int j = 0; j < N; ++j)
            ps.patterns(mu, j) = (eng() & 1ULL) ? 1 : -1;
        ps.labels[mu] = (eng() & 1ULL) ? 1 : -1;
    }
    return ps;
}

quantum::WeightVector sample_sphere_weight(int N, std::uint64_t seed) {
    if (N < 1) throw std::invalid_argument("sample_sphere_weight: N >= 1");
    auto eng = engine_for(seed, 0);
    Eigen::VectorXd v = gaussian_vector(N, eng);
    while (v.norm() == 0.0) v = gaussian_vector(N, eng);  // measure zero
    v *= std::sqrt(double(N)) / v.norm();
    return {std::move(v), std::sqrt(double(N))};
}

bool satisfies_all(const quantum::WeightVector& w, const PatternSet& ps,
                   double lambda) {
    if (w.w.size() != ps.N)
        throw std::invalid_argument("satisfies_all: dimension mismatch");
    const Eigen::VectorXd fields =
        (ps.patterns.cast<double>() * w.w) * (lambda / w.norm);
    for (int mu = 0; mu < ps.p; ++mu)
        if (!(ps.labels[mu] * std::sin(fields[mu]) > 0.0)) return false;
    return true;
}

VolumeEstimate estimate_volume(const PatternSet& ps, double lambda,
                               long samples, std::uint64_t seed, int threads) {
    if (samples < 1) throw std::invalid_argument("estimate_volume: samples >= 1");
    if (threads <= 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    const double sqrt_n = std::sqrt(double(ps.N));

    auto count_range = [&](long lo, long hi) {
        long hits = 0;
        for (long i = lo; i < hi; ++i) {
            auto eng = engine_for(seed, static_cast<std::uint64_t>(i));
            Eigen::VectorXd v = gaussian_vector(ps.N, eng);
            const double norm = v.norm();
            if (norm == 0.0) continue;
            quantum::WeightVector w{v * (sqrt_n / norm), sqrt_n};
            if (satisfies_all(w, ps, lambda)) ++hits;
        }
        return hits;
    };

    long hits = 0;
    if (threads == 1 || samples < 1024) {
        hits = count_range(0, samples);
    } else {
        std::vector<std::future<long>> futures;
        const long chunk = (samples + threads - 1) / threads;
        for (long lo = 0; lo < samples; lo += chunk)
            futures.push_back(std::async(std::launch::async, count_range, lo,
                                         std::min(lo + chunk, samples)));
        for (auto& f : futures) hits += f.get();
    }
    VolumeEstimate est;
    est.fraction = double(hits) / double(samples);
    est.stderr_ = std::sqrt(est.fraction * (1.0 - est.fraction) / samples);
    est.samples = samples;
    est.seed = seed;
    return est;
}

std::vector<ScanRow> capacity_scan(int N, double lambda,
                                   const std::vector<double>& alpha_grid,
                                   int trials, long samples,
                                   std::uint64_t seed, int threads) {
    if (trials < 1) throw std::invalid_argument("capacity_scan: trials >= 1");
    for (double a : alpha_grid)
        if (!(a > 0.0)) throw std::invalid_argument("capacity_scan: alpha > 0");
    std::vector<ScanRow> rows;
    rows.reserve(alpha_grid.size());
    for (std::size_t ai = 0; ai < alpha_grid.size(); ++ai) {
        const double alpha = alpha_grid[ai];
        const int p = static_cast<int>(std::lround(alpha * N));
        std::vector<double> fractions(trials);
        int positive = 0;
        double log_sum = 0.0;
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t cell =
                mix64(seed ^ mix64(ai * 1000003ULL + static_cast<std::uint64_t>(t)));
            const PatternSet ps = sample_patterns(N, p, cell);
            const VolumeEstimate est =
                estimate_volume(ps, lambda, samples, mix64(cell ^ 0x5bf03635ULL),
                                threads);
            fractions[t] = est.fraction;
            if (est.fraction > 0.0) {
                ++positive;
                log_sum += std::log(est.fraction);
            }
        }
        std::sort(fractions.begin(), fractions.end());
        ScanRow row;
        row.alpha = alpha;
        row.p = p;
        row.frac_positive = double(positive) / trials;
        row.mean_log_nonzero = positive > 0 ? log_sum / positive : 0.0;
        row.q25 = quantile(fractions, 0.25);
        row.q50 = quantile(fractions, 0.50);
        row.q75 = quantile(fractions, 0.75);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace percap::mc
