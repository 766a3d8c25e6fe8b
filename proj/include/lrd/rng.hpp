#pragma once

#include <cstdint>
#include <random>

namespace lrd {

// splitmix64 finalizer; used for seed derivation so that replication r of a
// run with master seed m gets a stream that is uncorrelated with replication
// r' and identical no matter which worker thread picks it up.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index) {
    std::uint64_t h = splitmix64(master ^ 0xA0761D6478BD642FULL);
    h = splitmix64(h ^ stream);
    h = splitmix64(h ^ index);
    return h;
}

// Uniform doubles in (0,1) from a fully specified engine (mt19937_64 is
// reproducible across platforms by the standard; std::*_distribution is not,
// so all laws are sampled by inverse CDF on top of this).
class UniformSource {
  public:
    explicit UniformSource(std::uint64_t seed) : engine_(seed) {}

    double next() {
        // 53-bit mantissa, shifted into the open interval
        const std::uint64_t bits = engine_() >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace lrd
