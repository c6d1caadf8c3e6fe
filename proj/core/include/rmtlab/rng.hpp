#pragma once

#include <complex>
#include <cstdint>

namespace rmtlab {

// Seeded, stream-addressable generator (xoshiro256** with splitmix64 key
// expansion).  A (seed, stream_id) pair fully determines the sample
// sequence, so sample-parallel work stays reproducible regardless of how
// samples are assigned to threads.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// uniform on [0, 1)
    double next_double();

    /// standard real normal N(0, 1)
    double next_normal();

    /// standard complex normal, E|g|^2 = 1
    std::complex<double> next_cnormal();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t s_[4];
    std::uint64_t seed_, stream_id_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

} // namespace rmtlab
