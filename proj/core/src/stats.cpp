#include "rmtlab/stats.hpp"
#include "rmtlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace rmtlab {

Histogram::Histogram(double lo_, double hi_, int bins_)
    : lo(lo_), hi(hi_), bins(bins_), counts(bins_, 0.0) {
    if (!(lo < hi)) throw std::invalid_argument("Histogram: need lo < hi");
    if (bins < 1) throw std::invalid_argument("Histogram: need bins >= 1");
}

void Histogram::add(double x) {
    if (x < lo) {
        ++below;
    } else if (x >= hi) {
        ++above;
    } else {
        int i = static_cast<int>((x - lo) / bin_width());
        if (i >= bins) i = bins - 1;
        counts[i] += 1.0;
    }
}

void Histogram::add_all(const std::vector<double>& xs) {
    for (double x : xs) add(x);
}

long long Histogram::in_range() const {
    return static_cast<long long>(
        std::accumulate(counts.begin(), counts.end(), 0.0) + 0.5);
}

long long Histogram::total_points() const { return in_range() + below + above; }

double Histogram::density(int i) const {
    return counts[i] / (static_cast<double>(total_samples) * bin_width());
}

double Histogram::density_error(int i) const {
    return std::sqrt(std::max(counts[i], 1.0)) /
           (static_cast<double>(total_samples) * bin_width());
}

void Histogram::merge(const Histogram& other) {
    if (other.bins != bins || other.lo != lo || other.hi != hi)
        throw std::invalid_argument("Histogram::merge: binning mismatch");
    for (int i = 0; i < bins; ++i) counts[i] += other.counts[i];
    total_samples += other.total_samples;
    below += other.below;
    above += other.above;
}

void Histogram::write_csv(std::ostream& os) const {
    os << "bin_center,density,poisson_error\n";
    for (int i = 0; i < bins; ++i)
        os << bin_center(i) << ',' << density(i) << ',' << density_error(i)
           << '\n';
}

Histogram histogram(const std::vector<double>& samples, double lo, double hi,
                    int bins) {
    Histogram h(lo, hi, bins);
    h.total_samples = 1;
    h.add_all(samples);
    return h;
}

void ComparisonReport::write_json(std::ostream& os) const {
    os << "{\n"
       << "  \"chi2_per_bin\": " << chi2_per_bin << ",\n"
       << "  \"sup_deviation\": " << sup_deviation << ",\n"
       << "  \"ks_statistic\": " << ks_statistic << ",\n"
       << "  \"bins_exceeding_3sigma\": " << bins_exceeding_3sigma << ",\n"
       << "  \"merged_bins\": " << merged_bins << "\n"
       << "}\n";
}

namespace {

// gauss5 with recursive bisection: one panel suffices for smooth densities,
// but integrable endpoint singularities (e.g. log divergences of finite-N
// kernels at the hard edge) need refinement to keep the expected counts
// unbiased at the Poisson-error scale
double bin_mass(const std::function<double(double)>& f, double a, double b,
                double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gauss5(f, a, mid);
    const double right = gauss5(f, mid, b);
    if (depth <= 0 || std::abs(left + right - whole) <= tol)
        return left + right;
    return bin_mass(f, a, mid, left, 0.5 * tol, depth - 1) +
           bin_mass(f, mid, b, right, 0.5 * tol, depth - 1);
}

} // namespace

ComparisonReport compare(const Histogram& hist,
                         const std::function<double(double)>& analytic) {
    ComparisonReport rep;
    const double s = static_cast<double>(hist.total_samples);
    const double dx = hist.bin_width();

    std::vector<double> expected(hist.bins);
    for (int i = 0; i < hist.bins; ++i) {
        const double a = hist.lo + i * dx;
        // bin-averaged, not midpoint: unbiased where the density is curved
        const double rough = gauss5(analytic, a, a + dx);
        const double tol = std::max(1e-14, 1e-5 * std::abs(rough));
        expected[i] = s * bin_mass(analytic, a, a + dx, rough, tol, 24);
    }

    const double tot_exp = std::accumulate(expected.begin(), expected.end(), 0.0);
    const double tot_obs =
        std::accumulate(hist.counts.begin(), hist.counts.end(), 0.0);
    double cum_obs = 0.0, cum_exp = 0.0;
    for (int i = 0; i < hist.bins; ++i) {
        const double dev = std::abs(hist.counts[i] - expected[i]);
        rep.sup_deviation = std::max(rep.sup_deviation, dev / (s * dx));
        if (expected[i] > 0.0 && dev > 3.0 * std::sqrt(expected[i]))
            ++rep.bins_exceeding_3sigma;
        // KS on the normalized cumulative shapes
        cum_obs += hist.counts[i];
        cum_exp += expected[i];
        if (tot_obs > 0.0 && tot_exp > 0.0)
            rep.ks_statistic =
                std::max(rep.ks_statistic,
                         std::abs(cum_obs / tot_obs - cum_exp / tot_exp));
    }

    // merge adjacent bins until every merged bin has expected count >= 5;
    // the trailing remainder is folded into the last merged bin
    std::vector<std::pair<double, double>> merged; // (obs, exp)
    double obs_acc = 0.0, exp_acc = 0.0;
    for (int i = 0; i < hist.bins; ++i) {
        obs_acc += hist.counts[i];
        exp_acc += expected[i];
        if (exp_acc >= 5.0) {
            merged.emplace_back(obs_acc, exp_acc);
            obs_acc = exp_acc = 0.0;
        }
    }
    if (obs_acc > 0.0 || exp_acc > 0.0) {
        if (!merged.empty()) {
            merged.back().first += obs_acc;
            merged.back().second += exp_acc;
        } else if (obs_acc > 0.0) {
            merged.emplace_back(obs_acc, exp_acc);
        }
    }
    double chi2 = 0.0;
    for (const auto& [obs, exp] : merged) {
        if (exp <= 0.0) {
            // observed counts where the model predicts none
            chi2 = std::numeric_limits<double>::infinity();
            break;
        }
        const double d = obs - exp;
        chi2 += d * d / exp;
    }
    rep.merged_bins = static_cast<int>(merged.size());
    rep.chi2_per_bin = merged.empty() ? 0.0 : chi2 / merged.size();
    return rep;
}

std::vector<double> unfold_by_rank(const Spectrum& spec) {
    const int n = spec.size();
    std::vector<double> p(n);
    for (int j = 1; j <= n; ++j) p[j - 1] = static_cast<double>(j) / n;
    return p;
}

std::vector<double> zoom_local(const std::vector<double>& u_values, double p,
                               int n, double xi_max) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("zoom_local: need 0 < p < 1");
    std::vector<double> xs;
    for (double u : u_values) {
        const double xi = n * (u - p);
        if (std::abs(xi) <= xi_max) xs.push_back(xi);
    }
    return xs;
}

Histogram spacing_distribution(const std::vector<Spectrum>& spectra,
                               double window_lo, double window_hi, int bins,
                               double max_spacing) {
    std::vector<double> spacings;
    for (const auto& s : spectra) {
        for (int j = 1; j < s.size(); ++j) {
            const double a = s.values[j - 1], b = s.values[j];
            if (a >= window_lo && b <= window_hi) spacings.push_back(b - a);
        }
    }
    if (spacings.empty())
        throw std::invalid_argument("spacing_distribution: window contains no spacings");
    const double mean = std::accumulate(spacings.begin(), spacings.end(), 0.0) /
                        spacings.size();
    Histogram h(0.0, max_spacing, bins);
    h.total_samples = static_cast<long long>(spacings.size());
    for (double sp : spacings) h.add(sp / mean);
    return h;
}

} // namespace rmtlab
