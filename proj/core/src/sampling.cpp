#include "rmtlab/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace rmtlab {

EntryLaw entry_law_from_string(const std::string& name) {
    if (name == "gaussian-complex") return EntryLaw::GaussianComplex;
    if (name == "uniform-complex") return EntryLaw::UniformComplex;
    if (name == "bernoulli-complex") return EntryLaw::BernoulliComplex;
    throw std::invalid_argument("unknown entry law: " + name);
}

std::string to_string(EntryLaw law) {
    switch (law) {
    case EntryLaw::GaussianComplex: return "gaussian-complex";
    case EntryLaw::UniformComplex: return "uniform-complex";
    case EntryLaw::BernoulliComplex: return "bernoulli-complex";
    }
    return "?";
}

std::complex<double> sample_entry(EntryLaw law, RngStream& rng) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    switch (law) {
    case EntryLaw::GaussianComplex:
        return rng.next_cnormal();
    case EntryLaw::UniformComplex: {
        const double a = std::sqrt(1.5); // component variance 1/2
        return {a * (2.0 * rng.next_double() - 1.0),
                a * (2.0 * rng.next_double() - 1.0)};
    }
    case EntryLaw::BernoulliComplex: {
        const std::uint64_t bits = rng.next_u64();
        return {(bits & 1) ? inv_sqrt2 : -inv_sqrt2,
                (bits & 2) ? inv_sqrt2 : -inv_sqrt2};
    }
    }
    throw std::logic_error("unreachable");
}

ComplexMatrix sample_ginibre(int n, EntryLaw law, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("sample_ginibre: n must be >= 1");
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g(i, j) = sample_entry(law, rng);
    return g;
}

ComplexMatrix sample_gue(int n, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("sample_gue: n must be >= 1");
    ComplexMatrix h(n, n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = rng.next_normal();
        for (int j = i + 1; j < n; ++j) {
            // H_ij = (g_ij + conj(g_ji))/sqrt(2), E|H_ij|^2 = 1
            const std::complex<double> v = rng.next_cnormal();
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

} // namespace rmtlab
