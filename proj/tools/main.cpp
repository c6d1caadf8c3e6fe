// rmtlab command-line runner: every pipeline as a subcommand, emitting
// plot-ready CSV/JSON.  Exit codes: 0 ok, 1 validation, 2 numerical failure,
// 3 assertion failure (--assert).

#include "rmtlab/additive.hpp"
#include "rmtlab/kernels_analytic.hpp"
#include "rmtlab/kernels_finite.hpp"
#include "rmtlab/multiplicative.hpp"
#include "rmtlab/parallel.hpp"
#include "rmtlab/sampling.hpp"
#include "rmtlab/stats.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitAssert = 3;

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct AssertionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Resolved run configuration, recorded verbatim in every output file.
// Thread count is deliberately excluded: it must never affect results.
struct RunConfig {
    std::string subcommand;
    std::map<std::string, std::string> kv;

    void set(const std::string& k, const std::string& v) { kv[k] = v; }
    void set(const std::string& k, double v) {
        std::ostringstream os;
        os << std::setprecision(17) << v;
        kv[k] = os.str();
    }
    void set(const std::string& k, long long v) { kv[k] = std::to_string(v); }
    void set(const std::string& k, int v) { kv[k] = std::to_string(v); }

    std::string canonical() const {
        std::string s = subcommand;
        for (const auto& [k, v] : kv) s += " " + k + "=" + v;
        return s;
    }
    std::string hash_hex() const {
        std::ostringstream os;
        os << std::hex << std::setw(16) << std::setfill('0')
           << fnv1a(canonical());
        return os.str();
    }
};

void write_header(std::ostream& os, const RunConfig& cfg) {
    os << "# rmtlab 0.1.0\n";
    os << "# config " << cfg.canonical() << "\n";
    os << "# config-hash " << cfg.hash_hex() << "\n";
}

std::ofstream open_out(const std::string& path, const RunConfig& cfg) {
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot open output file: " + path);
    os << std::setprecision(17);
    write_header(os, cfg);
    return os;
}

void write_histogram(const std::string& path, const RunConfig& cfg,
                     const rmtlab::Histogram& h) {
    auto os = open_out(path, cfg);
    os << "# histogram lo=" << h.lo << " hi=" << h.hi << " bins=" << h.bins
       << " total_samples=" << h.total_samples << " below=" << h.below
       << " above=" << h.above << "\n";
    h.write_csv(os);
}

void write_report(const std::string& path, const RunConfig& cfg,
                  const rmtlab::ComparisonReport& rep) {
    auto os = open_out(path, cfg);
    json j;
    j["config"] = cfg.canonical();
    j["config_hash"] = cfg.hash_hex();
    j["chi2_per_bin"] = rep.chi2_per_bin;
    j["sup_deviation"] = rep.sup_deviation;
    j["ks_statistic"] = rep.ks_statistic;
    j["bins_exceeding_3sigma"] = rep.bins_exceeding_3sigma;
    j["merged_bins"] = rep.merged_bins;
    os << j.dump(2) << "\n";
}

std::pair<double, double> parse_range(const std::string& s) {
    const auto c = s.find(':');
    if (c == std::string::npos)
        throw ValidationError("range must be lo:hi, got '" + s + "'");
    double lo, hi;
    try {
        lo = std::stod(s.substr(0, c));
        hi = std::stod(s.substr(c + 1));
    } catch (const std::exception&) {
        throw ValidationError("range must be lo:hi, got '" + s + "'");
    }
    if (!(lo < hi)) throw ValidationError("range needs lo < hi");
    return {lo, hi};
}

struct Grid {
    double lo, hi, step;
    std::vector<double> points() const {
        std::vector<double> xs;
        const long n = static_cast<long>(std::floor((hi - lo) / step + 0.5));
        for (long i = 0; i <= n; ++i) xs.push_back(lo + i * step);
        return xs;
    }
};

Grid parse_grid(const std::string& s) {
    const auto c1 = s.find(':');
    const auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ValidationError("grid must be lo:hi:step, got '" + s + "'");
    Grid g{};
    try {
        g.lo = std::stod(s.substr(0, c1));
        g.hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
        g.step = std::stod(s.substr(c2 + 1));
    } catch (const std::exception&) {
        throw ValidationError("grid must be lo:hi:step, got '" + s + "'");
    }
    if (!(g.lo < g.hi) || !(g.step > 0.0))
        throw ValidationError("grid needs lo < hi and step > 0");
    return g;
}

// ---------------------------------------------------------------------------
// Kernel family dispatch shared by `kernel` and `compare`.

struct FamilyOptions {
    std::string family = "sine";
    double w = 1.0, s = 1.0, a = 1.0, p = 0.5, tol = 1e-10;
    int n = 4, m = 3;
    double finite_tol = 1e-8;
};

void add_family_flags(CLI::App* cmd, FamilyOptions& fo) {
    cmd->add_option("--family", fo.family,
                    "kernel family: sine|kw|kt|khat|kp|finite|finite-l|finite-u")
        ->required();
    cmd->add_option("--w", fo.w, "width-to-spacing ratio");
    cmd->add_option("--s", fo.s, "initial spacing (kt family)");
    cmd->add_option("--a", fo.a, "aspect ratio (kp family)");
    cmd->add_option("--p", fo.p, "spectral position (kp family)");
    cmd->add_option("--n", fo.n, "matrix size (finite families)");
    cmd->add_option("--m", fo.m, "factor count (finite families)");
    cmd->add_option("--tol", fo.tol, "truncation tolerance");
}

void record_family(RunConfig& cfg, const FamilyOptions& fo) {
    cfg.set("family", fo.family);
    cfg.set("tol", fo.tol);
    if (fo.family == "kw" || fo.family == "khat") cfg.set("w", fo.w);
    if (fo.family == "kt") {
        cfg.set("w", fo.w);
        cfg.set("s", fo.s);
    }
    if (fo.family == "kp") {
        cfg.set("a", fo.a);
        cfg.set("p", fo.p);
    }
    if (fo.family.rfind("finite", 0) == 0) {
        cfg.set("n", fo.n);
        cfg.set("m", fo.m);
    }
}

std::function<double(double, double)> family_evaluator(const FamilyOptions& fo) {
    using namespace rmtlab;
    const double w = fo.w, s = fo.s, a = fo.a, p = fo.p, tol = fo.tol;
    const int n = fo.n, m = fo.m;
    FiniteKernelConfig fcfg;
    fcfg.tolerance = fo.tol < 1e-4 ? fo.tol : 1e-8;
    if (fo.family == "sine")
        return [](double x, double y) { return sine_kernel(x, y); };
    if (fo.family == "kw")
        return [=](double x, double y) { return kernel_Kw(x, y, w, tol); };
    if (fo.family == "kt")
        return [=](double x, double y) { return kernel_Kt(x, y, s, w, tol); };
    if (fo.family == "khat")
        return [=](double x, double y) { return kernel_Khat(x, y, w, tol); };
    if (fo.family == "kp")
        return [=](double x, double y) { return kernel_Kp(x, y, a, p, tol); };
    if (fo.family == "finite")
        return [=](double x, double y) { return kernel_KY(x, y, n, m, fcfg); };
    if (fo.family == "finite-l")
        return [=](double x, double y) { return kernel_KL(x, y, n, m, fcfg); };
    if (fo.family == "finite-u")
        return [=](double x, double y) { return kernel_Ku(x, y, n, m, fcfg); };
    throw ValidationError("unknown kernel family '" + fo.family + "'");
}

// ---------------------------------------------------------------------------
// dyson

struct DysonOptions {
    int n = 255;
    double w = 0.5, sigma_c = 1.0, s = 1.0;
    long long samples = 10000;
    int bins = 100;
    std::string range = "-2.5:2.5";
    std::uint64_t seed = 1;
    bool walk = false;
    double dt = 1e-3;
    std::string out = "dyson";
    bool do_assert = false;
    int threads = 0;
};

int run_dyson(const DysonOptions& o) {
    using namespace rmtlab;
    if (o.n < 1 || o.n % 2 == 0)
        throw ValidationError("dyson: --n must be odd (n = 2K-1)");
    if (!(o.w > 0.0))
        throw ValidationError("dyson: --w must be > 0 (the analytic kernel is "
                              "not defined pointwise at w = 0)");
    if (!(o.sigma_c > 0.0) || !(o.s > 0.0))
        throw ValidationError("dyson: --sigma-c and --spacing must be > 0");
    if (o.samples < 1 || o.bins < 1)
        throw ValidationError("dyson: --samples and --bins must be >= 1");
    const auto [lo, hi] = parse_range(o.range);
    const double t = (o.w * o.s / o.sigma_c) * (o.w * o.s / o.sigma_c);
    const int k = (o.n + 1) / 2;

    RunConfig cfg;
    cfg.subcommand = "dyson";
    cfg.set("n", o.n);
    cfg.set("w", o.w);
    cfg.set("sigma_c", o.sigma_c);
    cfg.set("s", o.s);
    cfg.set("t", t);
    cfg.set("samples", o.samples);
    cfg.set("bins", o.bins);
    cfg.set("range", o.range);
    cfg.set("seed", static_cast<long long>(o.seed));
    cfg.set("process", o.walk ? std::string("coulomb-walk")
                              : std::string("free-sum-shortcut"));
    if (o.walk) cfg.set("dt", o.dt);

    const int workers = o.threads > 0 ? o.threads : thread_count();
    std::vector<Histogram> partials(workers, Histogram(lo, hi, o.bins));
    const ComplexMatrix a0 = equidistant_initial(k, o.s);
    Spectrum init;
    for (int j = 1; j <= o.n; ++j) init.values.push_back((j - k) * o.s);

    parallel_for(
        o.samples,
        [&](long i, int wid) {
            RngStream rng(o.seed, static_cast<std::uint64_t>(i));
            Spectrum spec;
            if (o.walk) {
                Trajectory traj = coulomb_gas_walk(init, o.sigma_c, t, o.dt,
                                                   rng, 1 << 30);
                spec = traj.spectra.back();
            } else {
                spec = hermitian_eigenvalues(
                    additive_shortcut(a0, o.sigma_c, t, rng));
            }
            partials[wid].add_all(spec.values);
            partials[wid].total_samples += 1;
        },
        workers);

    Histogram hist(lo, hi, o.bins);
    for (const auto& ph : partials) hist.merge(ph);

    auto analytic = [&](double x) { return kernel_Kt(x, x, o.s, o.w); };
    const ComparisonReport rep = compare(hist, analytic);

    write_histogram(o.out + "_hist.csv", cfg, hist);
    {
        auto os = open_out(o.out + "_analytic.csv", cfg);
        os << "x,density\n";
        const double step = hist.bin_width() / 4.0;
        for (double x = lo; x <= hi + step / 2; x += step)
            os << x << ',' << analytic(x) << '\n';
    }
    write_report(o.out + "_report.json", cfg, rep);

    std::cout << "dyson: chi2/bin=" << rep.chi2_per_bin
              << " sup-dev=" << rep.sup_deviation
              << " bins>3sigma=" << rep.bins_exceeding_3sigma << "/" << o.bins
              << "\n";
    if (o.do_assert) {
        if (rep.chi2_per_bin > 2.0)
            throw AssertionFailure("dyson: chi2 per merged bin > 2");
        if (rep.bins_exceeding_3sigma > 0.02 * o.bins)
            throw AssertionFailure("dyson: > 2% of bins beyond 3-sigma bands");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// lyapunov

struct LyapunovOptions {
    int n = 8;
    int m = 10000;
    long long samples = 1000;
    std::string method = "qr";
    std::string law = "gaussian-complex";
    std::uint64_t seed = 1;
    double p = -1.0; // < 0: no local zoom
    double xi_max = 3.0;
    int bins = 60;
    std::uint64_t dump_spectra = 0;
    std::string out = "lyapunov";
    bool do_assert = false;
    int threads = 0;
};

int run_lyapunov(const LyapunovOptions& o) {
    using namespace rmtlab;
    if (o.n < 1 || o.m < 1 || o.samples < 1)
        throw ValidationError("lyapunov: --n, --m, --samples must be >= 1");
    if (o.method != "qr" && o.method != "svd")
        throw ValidationError("lyapunov: --method must be qr or svd");
    if (o.p >= 0.0 && !(o.p > 0.0 && o.p < 1.0))
        throw ValidationError("lyapunov: --p must be in (0, 1)");
    ProductConfig pc;
    pc.n = o.n;
    pc.m = o.m;
    pc.law = entry_law_from_string(o.law);

    RunConfig cfg;
    cfg.subcommand = "lyapunov";
    cfg.set("n", o.n);
    cfg.set("m", o.m);
    cfg.set("samples", o.samples);
    cfg.set("method", o.method);
    cfg.set("law", o.law);
    cfg.set("seed", static_cast<long long>(o.seed));
    if (o.p > 0.0) {
        cfg.set("p", o.p);
        cfg.set("xi_max", o.xi_max);
        cfg.set("bins", o.bins);
    }

    const int workers = o.threads > 0 ? o.threads : thread_count();
    // per-sample slots so the reduction order is independent of scheduling
    std::vector<std::vector<double>> lambdas(o.samples);
    parallel_for(
        o.samples,
        [&](long i, int) {
            RngStream rng(o.seed, static_cast<std::uint64_t>(i));
            LyapunovSpectrum spec = o.method == "qr"
                                        ? product_spectrum_qr(pc, rng)
                                        : product_spectrum_svd(pc, rng);
            lambdas[i] = std::move(spec.exponents);
        },
        workers);

    // per-j moments vs the digamma predictions
    std::vector<double> mean(o.n, 0.0), var(o.n, 0.0);
    for (const auto& lam : lambdas)
        for (int j = 0; j < o.n; ++j) mean[j] += lam[j];
    for (int j = 0; j < o.n; ++j) mean[j] /= static_cast<double>(o.samples);
    for (const auto& lam : lambdas)
        for (int j = 0; j < o.n; ++j) {
            const double d = lam[j] - mean[j];
            var[j] += d * d;
        }
    for (int j = 0; j < o.n; ++j)
        var[j] /= static_cast<double>(o.samples > 1 ? o.samples - 1 : 1);

    {
        auto os = open_out(o.out + "_peaks.csv", cfg);
        os << "j,mean_lambda,std_lambda,predicted_position,predicted_width,"
              "standard_error\n";
        for (int j = 1; j <= o.n; ++j)
            os << j << ',' << mean[j - 1] << ',' << std::sqrt(var[j - 1]) << ','
               << deterministic_position(j) << ',' << peak_width(j, o.m) << ','
               << std::sqrt(var[j - 1] / static_cast<double>(o.samples))
               << '\n';
    }

    if (o.dump_spectra > 0) {
        auto os = open_out(o.out + "_spectra.csv", cfg);
        os << "sample,j,lambda_j,u_j\n";
        const long long limit =
            std::min<long long>(o.samples, static_cast<long long>(o.dump_spectra));
        for (long long i = 0; i < limit; ++i) {
            LyapunovSpectrum tmp{lambdas[i], o.m,
                                 o.method == "qr" ? LyapunovMethod::QrAccumulation
                                                  : LyapunovMethod::ScaledSvd};
            const auto u = unfold_u(tmp, o.n);
            for (int j = 0; j < o.n; ++j)
                os << i << ',' << (j + 1) << ',' << lambdas[i][j] << ','
                   << u[j] << '\n';
        }
    }

    ComparisonReport rep;
    bool have_rep = false;
    if (o.p > 0.0) {
        Histogram local(-o.xi_max, o.xi_max, o.bins);
        for (const auto& lam : lambdas) {
            LyapunovSpectrum tmp{lam, o.m, LyapunovMethod::QrAccumulation};
            const auto u = unfold_u(tmp, o.n);
            local.add_all(zoom_local(u, o.p, o.n, o.xi_max));
            local.total_samples += 1;
        }
        const double a = aspect_ratio(o.n, o.m);
        auto analytic = [&](double xi) { return kernel_Kp(xi, xi, a, o.p); };
        rep = compare(local, analytic);
        have_rep = true;
        write_histogram(o.out + "_local_hist.csv", cfg, local);
        {
            auto os = open_out(o.out + "_analytic.csv", cfg);
            os << "xi,density\n";
            const double step = local.bin_width() / 4.0;
            for (double x = -o.xi_max; x <= o.xi_max + step / 2; x += step)
                os << x << ',' << analytic(x) << '\n';
        }
        write_report(o.out + "_report.json", cfg, rep);
        std::cout << "lyapunov: chi2/bin=" << rep.chi2_per_bin
                  << " sup-dev=" << rep.sup_deviation << "\n";
    } else {
        std::cout << "lyapunov: wrote per-peak table for n=" << o.n
                  << " m=" << o.m << "\n";
    }

    if (o.do_assert) {
        if (have_rep && rep.chi2_per_bin > 2.0)
            throw AssertionFailure("lyapunov: chi2 per merged bin > 2");
        for (int j = 1; j <= o.n; ++j) {
            const double se =
                std::sqrt(var[j - 1] / static_cast<double>(o.samples));
            if (std::abs(mean[j - 1] - deterministic_position(j)) > 3.0 * se)
                throw AssertionFailure(
                    "lyapunov: mean lambda_" + std::to_string(j) +
                    " off the digamma prediction by > 3 standard errors");
            const double width_ratio =
                std::sqrt(var[j - 1]) / peak_width(j, o.m);
            if (std::abs(width_ratio - 1.0) > 0.05)
                throw AssertionFailure("lyapunov: std of lambda_" +
                                       std::to_string(j) +
                                       " off the trigamma width by > 5%");
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// kernel

struct KernelOptions {
    FamilyOptions fam;
    std::string grid = "-3:3:0.01";
    bool full = false;
    std::string out = "kernel";
};

int run_kernel(const KernelOptions& o) {
    const Grid g = parse_grid(o.grid);
    RunConfig cfg;
    cfg.subcommand = "kernel";
    record_family(cfg, o.fam);
    cfg.set("grid", o.grid);
    cfg.set("full", o.full ? 1 : 0);
    auto K = family_evaluator(o.fam);
    const auto xs = g.points();
    if (o.full) {
        auto os = open_out(o.out + "_grid.csv", cfg);
        os << "xi,zeta,value\n";
        for (double x : xs)
            for (double y : xs) os << x << ',' << y << ',' << K(x, y) << '\n';
    } else {
        auto os = open_out(o.out + "_diag.csv", cfg);
        os << "x,density\n";
        for (double x : xs) os << x << ',' << K(x, x) << '\n';
    }
    std::cout << "kernel: " << xs.size() << (o.full ? " x " : " ")
              << (o.full ? std::to_string(xs.size()) + " points" : "points")
              << " written\n";
    return 0;
}

// ---------------------------------------------------------------------------
// duality

struct DualityOptions {
    std::vector<double> ws{0.25, 0.5, 1.0, 2.0};
    double grid_extent = 3.0;
    double grid_step = 0.05;
    double tol = 1e-10;
    double assert_tol = 1e-8;
    std::string out = "duality";
    bool do_assert = false;
};

int run_duality(const DualityOptions& o) {
    using namespace rmtlab;
    RunConfig cfg;
    cfg.subcommand = "duality";
    {
        std::ostringstream ws;
        ws << std::setprecision(17);
        for (std::size_t i = 0; i < o.ws.size(); ++i)
            ws << (i ? "," : "") << o.ws[i];
        cfg.set("w", ws.str());
    }
    cfg.set("grid_extent", o.grid_extent);
    cfg.set("grid_step", o.grid_step);
    cfg.set("tol", o.tol);

    json out = json::array();
    bool ok = true;
    for (double w : o.ws) {
        const DualityReport rep =
            duality_report(w, o.grid_extent, o.grid_step, o.tol);
        json j;
        j["w"] = rep.w;
        j["max_diag_abs_diff"] = rep.max_diag_abs_diff;
        j["max_r2_abs_diff"] = rep.max_r2_abs_diff;
        j["max_pointwise_abs_diff"] = rep.max_pointwise_abs_diff;
        j["gauge_exponent"] = rep.gauge_exponent;
        j["gauge_residual"] = rep.gauge_residual;
        out.push_back(j);
        std::cout << "duality w=" << w << ": diag=" << rep.max_diag_abs_diff
                  << " R2=" << rep.max_r2_abs_diff
                  << " pointwise=" << rep.max_pointwise_abs_diff
                  << " gauge-c=" << rep.gauge_exponent << "\n";
        if (rep.max_diag_abs_diff > o.assert_tol ||
            rep.max_r2_abs_diff > o.assert_tol)
            ok = false;
    }
    {
        auto os = open_out(o.out + "_report.json", cfg);
        json top;
        top["config"] = cfg.canonical();
        top["config_hash"] = cfg.hash_hex();
        top["reports"] = out;
        os << top.dump(2) << "\n";
    }
    if (o.do_assert && !ok)
        throw AssertionFailure(
            "duality: gauge-invariant discrepancy above tolerance");
    return 0;
}

// ---------------------------------------------------------------------------
// compare: histogram CSV (as written by this tool) vs an analytic family

struct CompareOptions {
    std::string hist_path;
    FamilyOptions fam;
    std::string out = "compare";
    bool do_assert = false;
    double chi2_bound = 2.0;
};

rmtlab::Histogram read_histogram(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ValidationError("cannot open histogram file: " + path);
    std::string line;
    double lo = 0, hi = 0;
    int bins = 0;
    long long total = 0, below = 0, above = 0;
    bool meta = false;
    std::vector<double> densities;
    while (std::getline(is, line)) {
        if (line.rfind("# histogram ", 0) == 0) {
            std::istringstream ls(line.substr(12));
            std::string tok;
            while (ls >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = tok.substr(0, eq);
                const std::string val = tok.substr(eq + 1);
                if (key == "lo") lo = std::stod(val);
                else if (key == "hi") hi = std::stod(val);
                else if (key == "bins") bins = std::stoi(val);
                else if (key == "total_samples") total = std::stoll(val);
                else if (key == "below") below = std::stoll(val);
                else if (key == "above") above = std::stoll(val);
            }
            meta = true;
            continue;
        }
        if (line.empty() || line[0] == '#' || line.rfind("bin_center", 0) == 0)
            continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ValidationError("malformed histogram row: " + line);
        densities.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
    }
    if (!meta)
        throw ValidationError(
            "histogram file lacks the '# histogram ...' metadata line");
    if (static_cast<int>(densities.size()) != bins)
        throw ValidationError("histogram file row count does not match bins=" +
                              std::to_string(bins));
    rmtlab::Histogram h(lo, hi, bins);
    h.total_samples = total;
    h.below = below;
    h.above = above;
    for (int i = 0; i < bins; ++i)
        h.counts[i] = std::round(densities[i] * total * h.bin_width());
    return h;
}

int run_compare(const CompareOptions& o) {
    using namespace rmtlab;
    const Histogram h = read_histogram(o.hist_path);
    RunConfig cfg;
    cfg.subcommand = "compare";
    cfg.set("hist", o.hist_path);
    record_family(cfg, o.fam);
    auto K = family_evaluator(o.fam);
    const ComparisonReport rep = compare(h, [&](double x) { return K(x, x); });
    write_report(o.out + "_report.json", cfg, rep);
    std::cout << "compare: chi2/bin=" << rep.chi2_per_bin
              << " sup-dev=" << rep.sup_deviation
              << " bins>3sigma=" << rep.bins_exceeding_3sigma << "\n";
    if (o.do_assert && rep.chi2_per_bin > o.chi2_bound)
        throw AssertionFailure("compare: chi2 per merged bin above bound");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"random-matrix dynamics laboratory"};
    app.require_subcommand(1);

    DysonOptions dy;
    auto* dyson = app.add_subcommand(
        "dyson", "additive eigenvalue dynamics vs the limiting density");
    dyson->add_option("--n", dy.n, "matrix size (odd, n = 2K-1)");
    dyson->add_option("--w", dy.w, "width-to-spacing ratio (> 0)")->required();
    dyson->add_option("--sigma-c", dy.sigma_c, "diffusion constant");
    dyson->add_option("--spacing", dy.s, "initial level spacing");
    dyson->add_option("--samples", dy.samples, "Monte-Carlo samples");
    dyson->add_option("--bins", dy.bins, "histogram bins");
    dyson->add_option("--range", dy.range, "histogram range lo:hi");
    dyson->add_option("--seed", dy.seed, "RNG seed");
    dyson->add_flag("--walk", dy.walk,
                    "integrate the Coulomb-gas SDE instead of the free-sum "
                    "shortcut");
    dyson->add_option("--dt", dy.dt, "SDE time step (--walk)");
    dyson->add_option("--out", dy.out, "output file prefix");
    dyson->add_flag("--assert", dy.do_assert, "exit 3 if comparison fails");
    dyson->add_option("--threads", dy.threads, "worker threads (default: env "
                                               "RMTLAB_THREADS or hardware)");

    LyapunovOptions ly;
    auto* lyap = app.add_subcommand(
        "lyapunov", "Ginibre-product Lyapunov spectra vs digamma predictions");
    lyap->add_option("--n", ly.n, "matrix size");
    lyap->add_option("--m", ly.m, "number of factors");
    lyap->add_option("--samples", ly.samples, "Monte-Carlo samples");
    lyap->add_option("--method", ly.method, "qr | svd");
    lyap->add_option("--law", ly.law,
                     "gaussian-complex | uniform-complex | bernoulli-complex");
    lyap->add_option("--seed", ly.seed, "RNG seed");
    lyap->add_option("--p", ly.p, "zoom position in (0,1); enables the local "
                                  "histogram vs the double-scaling density");
    lyap->add_option("--xi-max", ly.xi_max, "zoom window half-width");
    lyap->add_option("--bins", ly.bins, "zoom histogram bins");
    lyap->add_option("--dump-spectra", ly.dump_spectra,
                     "write per-sample (lambda_j, u_j) rows for the first K "
                     "samples");
    lyap->add_option("--out", ly.out, "output file prefix");
    lyap->add_flag("--assert", ly.do_assert, "exit 3 if checks fail");
    lyap->add_option("--threads", ly.threads, "worker threads");

    KernelOptions ke;
    auto* kernel =
        app.add_subcommand("kernel", "grid evaluation of any kernel family");
    add_family_flags(kernel, ke.fam);
    kernel->add_option("--grid", ke.grid, "evaluation grid lo:hi:step");
    kernel->add_flag("--full", ke.full,
                     "full (xi, zeta) grid instead of the diagonal");
    kernel->add_option("--out", ke.out, "output file prefix");

    DualityOptions du;
    auto* duality = app.add_subcommand(
        "duality", "Fourier-sum vs erfi-sum kernel comparison");
    duality->add_option("--w", du.ws, "w values (repeat or comma-separate)")
        ->delimiter(',');
    duality->add_option("--grid-extent", du.grid_extent, "grid half-width");
    duality->add_option("--grid-step", du.grid_step, "grid step");
    duality->add_option("--tol", du.tol, "kernel truncation tolerance");
    duality->add_option("--assert-tol", du.assert_tol,
                        "gauge-invariant agreement bound for --assert");
    duality->add_option("--out", du.out, "output file prefix");
    duality->add_flag("--assert", du.do_assert, "exit 3 if disagreement");

    CompareOptions co;
    auto* comp = app.add_subcommand(
        "compare", "histogram CSV vs an analytic kernel diagonal");
    comp->add_option("--hist", co.hist_path, "histogram CSV (as produced by "
                                             "this tool)")
        ->required();
    add_family_flags(comp, co.fam);
    comp->add_option("--out", co.out, "output file prefix");
    comp->add_flag("--assert", co.do_assert, "exit 3 if chi2 above bound");
    comp->add_option("--chi2-bound", co.chi2_bound, "chi2-per-bin bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitValidation;
    }

    try {
        if (dyson->parsed()) return run_dyson(dy);
        if (lyap->parsed()) return run_lyapunov(ly);
        if (kernel->parsed()) return run_kernel(ke);
        if (duality->parsed()) return run_duality(du);
        if (comp->parsed()) return run_compare(co);
    } catch (const AssertionFailure& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return kExitAssert;
    } catch (const ValidationError& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
