#include "ecg/rng.hpp"

namespace ecg {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
    // rejection sampling; threshold = 2^64 mod bound
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

} // namespace ecg
