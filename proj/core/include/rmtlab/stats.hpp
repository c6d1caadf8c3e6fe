#pragma once

#include "rmtlab/linalg.hpp"

#include <functional>
#include <iosfwd>
#include <vector>

namespace rmtlab {

/// Binned empirical density.  Out-of-range samples are tallied separately,
/// never dropped: below + in-range + above = total points seen.
struct Histogram {
    double lo = 0.0, hi = 1.0;
    int bins = 1;
    std::vector<double> counts;
    long long total_samples = 0; // number of independent samples (matrices)
    long long below = 0, above = 0;

    Histogram() = default;
    Histogram(double lo_, double hi_, int bins_);

    double bin_width() const { return (hi - lo) / bins; }
    double bin_center(int i) const { return lo + (i + 0.5) * bin_width(); }
    void add(double x);
    void add_all(const std::vector<double>& xs);
    long long in_range() const;
    long long total_points() const;

    /// Density normalized per sample: counts / (total_samples * bin_width).
    double density(int i) const;
    /// Poisson error on density(i).
    double density_error(int i) const;

    /// Associative merge of partial histograms (same binning required).
    void merge(const Histogram& other);

    /// CSV columns: bin_center, density, poisson_error
    void write_csv(std::ostream& os) const;
};

Histogram histogram(const std::vector<double>& samples, double lo, double hi,
                    int bins);

struct ComparisonReport {
    double chi2_per_bin = 0.0;
    double sup_deviation = 0.0; // in density units
    double ks_statistic = 0.0;
    int bins_exceeding_3sigma = 0;
    int merged_bins = 0;

    void write_json(std::ostream& os) const;
};

/// Compare a histogram against an analytic density (same normalization as
/// Histogram::density).  Expected counts are bin-averaged, bins with
/// expected count < 5 are merged with their neighbor before chi^2.
ComparisonReport compare(const Histogram& hist,
                         const std::function<double(double)>& analytic);

/// p_j = j / n for a sorted spectrum.
std::vector<double> unfold_by_rank(const Spectrum& spec);

/// Local zoom xi_j = n (u_j - p), restricted to |xi| <= xi_max.
std::vector<double> zoom_local(const std::vector<double>& u_values, double p,
                               int n, double xi_max);

/// Histogram of consecutive spacings inside [window_lo, window_hi],
/// normalized by the mean spacing in the window.
Histogram spacing_distribution(const std::vector<Spectrum>& spectra,
                               double window_lo, double window_hi,
                               int bins = 60, double max_spacing = 3.0);

} // namespace rmtlab
