// percap: storage capacity of the sinusoidal-activation perceptron.
//
// Subcommands:
//   capacity       alpha_c(lambda) curve with derivative
//   saddle         saddle overlap q* for given (lambda, alpha) pairs
//   limitcheck     q -> 1 extrapolation of alpha(lambda, q) vs closed form
//   mc             Monte Carlo Gardner-volume capacity scan
//   verify-circuit dense circuit vs closed-form readout states
//
// Exit codes: 0 ok, 2 usage, 3 I/O failure, 4 no-solution regime,
// 5 validation failure.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "percap/capacity.hpp"
#include "percap/gardner_mc.hpp"
#include "percap/io.hpp"
#include "percap/quantum.hpp"
#include "percap/replica.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNoSolution = 4;
constexpr int kExitValidation = 5;

void emit(const percap::io::Table& table, const std::string& path,
          const std::string& format) {
    if (path.empty() || path == "-")
        std::cout << (format == "json" ? percap::io::to_json(table)
                                       : percap::io::to_csv(table));
    else
        percap::io::write_table(table, path, format);
}

// "a:b:step" range or comma-separated list.
std::vector<double> parse_grid(const std::string& s) {
    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        double a, b, step;
        if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 ||
            step <= 0.0 || b < a)
            throw std::invalid_argument("bad range spec: " + s);
        for (double v = a; v <= b + 1e-12 * step; v += step) out.push_back(v);
        return out;
    }
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stod(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty grid spec");
    return out;
}

int cmd_capacity(double lmin, double lmax, int points, double tol,
                 const std::string& output, const std::string& format) {
    if (points < 1 || lmin < 0.0 || lmax < lmin || tol <= 0.0) {
        std::cerr << "capacity: invalid grid or tolerance\n";
        return kExitUsage;
    }
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = points == 1 ? lmin : lmin + (lmax - lmin) * i / (points - 1);
    const auto curve = percap::capacity::capacity_curve(grid, tol);
    percap::io::Table t;
    t.columns = {"lambda", "alpha_c", "dalpha_dlambda", "k_used"};
    for (std::size_t i = 0; i < curve.lambdas.size(); ++i)
        t.rows.push_back({curve.lambdas[i], curve.alpha_c[i],
                          curve.dalpha_dlambda[i],
                          double(curve.truncation_k[i])});
    emit(t, output, format);
    return kExitOk;
}

int cmd_saddle(const std::vector<double>& lambdas,
               const std::vector<double>& alphas, const std::string& output,
               const std::string& format) {
    if (lambdas.empty() || lambdas.size() != alphas.size()) {
        std::cerr << "saddle: --lambda and --alpha must be nonempty and zipped\n";
        return kExitUsage;
    }
    percap::replica::SeriesConfig cfg;
    percap::io::Table t;
    t.columns = {"lambda", "alpha", "q_star", "G", "alpha_residual"};
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const double lam = lambdas[i], alpha = alphas[i];
        if (!(lam > 0.0) || !(alpha > 0.0)) {
            std::cerr << "saddle: lambda and alpha must be > 0\n";
            return kExitUsage;
        }
        try {
            const double q = percap::replica::saddle_q(lam, alpha, cfg);
            const double g = percap::replica::free_energy_G(lam, alpha, q, cfg);
            const double residual =
                percap::replica::alpha_of_q(lam, q, cfg) - alpha;
            t.rows.push_back({lam, alpha, q, g, residual});
        } catch (const percap::replica::NoBracketError& e) {
            std::cerr << "saddle: " << e.what() << "\n";
            return kExitNoSolution;
        }
    }
    emit(t, output, format);
    return kExitOk;
}

double limit_gate(double lambda) { return lambda >= 5.0 ? 0.05 : 0.02; }

int cmd_limitcheck(const std::vector<double>& lambdas,
                   const std::vector<double>& q_list,
                   const std::string& output, const std::string& format) {
    for (double lam : lambdas)
        if (!(lam > 0.0)) {
            std::cerr << "limitcheck: lambda must be > 0\n";
            return kExitUsage;
        }
    percap::replica::SeriesConfig cfg;
    percap::io::Table t;
    t.columns = {"lambda", "extrapolated", "closed_form", "rel_gap", "gate"};
    bool failed = false;
    for (double lam : lambdas) {
        const auto check =
            percap::capacity::alpha_q_limit_check(lam, q_list, cfg);
        const double gate = limit_gate(lam);
        t.rows.push_back(
            {lam, check.extrapolated, check.closed_form, check.rel_gap, gate});
        if (check.rel_gap > gate) failed = true;
    }
    emit(t, output, format);
    return failed ? kExitValidation : kExitOk;
}

int cmd_mc(int n, double lambda, const std::string& alphas, int trials,
           long samples, std::uint64_t seed, int threads,
           const std::string& output, const std::string& format) {
    if (n < 1 || !(lambda > 0.0) || trials < 1 || samples < 1) {
        std::cerr << "mc: invalid parameters\n";
        return kExitUsage;
    }
    std::vector<double> grid;
    try {
        grid = parse_grid(alphas);
    } catch (const std::exception& e) {
        std::cerr << "mc: " << e.what() << "\n";
        return kExitUsage;
    }
    const auto rows =
        percap::mc::capacity_scan(n, lambda, grid, trials, samples, seed, threads);
    percap::io::Table t;
    t.comments = {"seed=" + std::to_string(seed)};
    t.columns = {"alpha",         "p",   "frac_positive", "mean_log_nonzero",
                 "q25",           "q50", "q75"};
    for (const auto& r : rows)
        t.rows.push_back({r.alpha, double(r.p), r.frac_positive,
                          r.mean_log_nonzero, r.q25, r.q50, r.q75});
    emit(t, output, format);
    return kExitOk;
}

int cmd_verify_circuit(int n, int cases, std::uint64_t seed) {
    if (n < 1 || n > 12) {
        std::cerr << "verify-circuit: N must be in [1, 12]\n";
        return kExitUsage;
    }
    if (cases < 1) {
        std::cerr << "verify-circuit: cases must be >= 1\n";
        return kExitUsage;
    }
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unif_lambda(0.0, 8.0);
    double max_gap = 0.0, max_sx_gap = 0.0;
    for (int c = 0; c < cases; ++c) {
        Eigen::VectorXd wv(n);
        for (int j = 0; j < n; ++j) wv[j] = normal(eng);
        if (wv.norm() == 0.0) wv[0] = 1.0;
        const auto w = percap::quantum::WeightVector::from(wv);
        percap::quantum::BinaryPattern x;
        x.bits.resize(n);
        for (int j = 0; j < n; ++j) x.bits[j] = (eng() & 1ULL) ? 1 : -1;
        const double lam = unif_lambda(eng);
        const auto dense = percap::quantum::full_circuit_output(w, x, lam);
        const auto closed = percap::quantum::output_state_lambda(w, x, lam);
        max_gap = std::max(max_gap, (dense - closed).cwiseAbs().maxCoeff());
        const double theta = lam * w.w.dot(x.bits.cast<double>()) / w.norm;
        max_sx_gap =
            std::max(max_sx_gap, std::abs(percap::quantum::expect_pauli(
                                              dense, 'x') -
                                          std::sin(theta)));
    }
    std::cout << "cases=" << cases << " max_entry_gap="
              << percap::io::format_number(max_gap)
              << " max_sigma_x_gap=" << percap::io::format_number(max_sx_gap)
              << "\n";
    return (max_gap <= 1e-12 && max_sx_gap <= 1e-12) ? kExitOk
                                                     : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Storage capacity of the sinusoidal-activation perceptron"};
    app.require_subcommand(1);

    std::string output = "-";
    std::string format = "csv";
    app.add_option("-o,--output", output, "Output path ('-' for stdout)");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* cap = app.add_subcommand("capacity", "alpha_c(lambda) curve");
    cap->fallthrough();
    double lmin = 0.0, lmax = 10.0, cap_tol = 1e-12;
    int points = 101;
    cap->add_option("--lmin", lmin, "Smallest lambda");
    cap->add_option("--lmax", lmax, "Largest lambda");
    cap->add_option("--points", points, "Grid size");
    cap->add_option("--tol", cap_tol, "Series truncation tolerance");

    auto* sad = app.add_subcommand("saddle", "Saddle overlap q*");
    sad->fallthrough();
    std::vector<double> sad_lambdas, sad_alphas;
    sad->add_option("--lambda", sad_lambdas, "Oscillation frequencies")
        ->required();
    sad->add_option("--alpha", sad_alphas, "Load parameters (zipped)")
        ->required();

    auto* lim = app.add_subcommand("limitcheck", "q -> 1 consistency check");
    lim->fallthrough();
    std::vector<double> lim_lambdas{0.5, 1.0, 2.0, 5.0};
    std::vector<double> lim_qs{0.99, 0.999, 0.9999};
    lim->add_option("--lambdas", lim_lambdas, "Lambda list");
    lim->add_option("--qs", lim_qs, "q list increasing toward 1");

    auto* mc = app.add_subcommand("mc", "Monte Carlo capacity scan");
    mc->fallthrough();
    int mc_n = 16, mc_trials = 50, mc_threads = 0;
    long mc_samples = 20000;
    double mc_lambda = 1e-6;
    std::uint64_t mc_seed = 1;
    std::string mc_alphas = "0.5:3.5:0.25";
    mc->add_option("--n", mc_n, "Input dimension N");
    mc->add_option("--lambda", mc_lambda, "Oscillation frequency");
    mc->add_option("--alphas", mc_alphas, "Alpha grid (a:b:step or list)");
    mc->add_option("--trials", mc_trials, "Pattern sets per alpha");
    mc->add_option("--samples", mc_samples, "Weight samples per trial");
    mc->add_option("--seed", mc_seed, "RNG seed");
    mc->add_option("--threads", mc_threads, "Worker threads (0 = auto)");

    auto* ver = app.add_subcommand("verify-circuit", "Dense circuit oracle");
    ver->fallthrough();
    int ver_n = 8, ver_cases = 200;
    std::uint64_t ver_seed = 1;
    ver->add_option("--n", ver_n, "Input dimension N (<= 12)");
    ver->add_option("--cases", ver_cases, "Random cases");
    ver->add_option("--seed", ver_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cap->parsed())
            return cmd_capacity(lmin, lmax, points, cap_tol, output, format);
        if (sad->parsed())
            return cmd_saddle(sad_lambdas, sad_alphas, output, format);
        if (lim->parsed())
            return cmd_limitcheck(lim_lambdas, lim_qs, output, format);
        if (mc->parsed())
            return cmd_mc(mc_n, mc_lambda, mc_alphas, mc_trials, mc_samples,
                          mc_seed, mc_threads, output, format);
        if (ver->parsed()) return cmd_verify_circuit(ver_n, ver_cases, ver_seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        return msg.find("write_table") != std::string::npos ? kExitIo
                                                            : kExitValidation;
    }
    return kExitUsage;
}
