#pragma once

#include "rmtlab/linalg.hpp"
#include "rmtlab/rng.hpp"

#include <string>

namespace rmtlab {

// Entry distribution for Ginibre factors.  All laws are centered with
// E|g|^2 = 1 (the CN(0,1) convention; every width formula downstream
// depends on this normalization).
enum class EntryLaw {
    GaussianComplex,  // Re, Im ~ N(0, 1/2)
    UniformComplex,   // Re, Im ~ U(-sqrt(3/2), sqrt(3/2))
    BernoulliComplex, // Re, Im = +-1/sqrt(2)
};

EntryLaw entry_law_from_string(const std::string& name);
std::string to_string(EntryLaw law);

std::complex<double> sample_entry(EntryLaw law, RngStream& rng);

/// n x n matrix of i.i.d. entries from `law`.
ComplexMatrix sample_ginibre(int n, EntryLaw law, RngStream& rng);

/// GUE matrix H = (G + G^dagger)/sqrt(2); diagonal N(0,1), off-diagonal
/// complex with E|h|^2 = 1.
ComplexMatrix sample_gue(int n, RngStream& rng);

} // namespace rmtlab
