#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ecg {

// Seed identity for one randomized run. (master, stream) pairs derive
// independent generator states, so ensemble members and benchmark cells
// can be reproduced individually.
struct RngSeed {
    std::uint64_t master = 0;
    std::uint64_t stream = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

// Collapses (master, stream) into a single engine seed.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream);

// mt19937_64 with hand-rolled bounded draws and shuffle. The standard
// library distributions and std::shuffle are implementation-defined, so
// byte-stable outputs require owning these primitives.
class Rng {
  public:
    explicit Rng(RngSeed seed) : engine_(mix_seed(seed.master, seed.stream)) {}
    explicit Rng(std::uint64_t engine_seed) : engine_(engine_seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased draw from [0, bound); bound must be positive.
    std::uint64_t uniform_index(std::uint64_t bound);

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Fisher-Yates, descending index order.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(values[i - 1], values[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace ecg
