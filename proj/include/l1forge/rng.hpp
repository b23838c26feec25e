#pragma once

#include <cstdint>
#include <vector>

namespace l1forge {

/// Deterministic generator used for every random choice in the toolkit.
/// SplitMix64 keeps seeded runs byte-identical across platforms and standard
/// libraries, which std::shuffle / std::uniform_int_distribution do not
/// guarantee.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). n must be > 0. Rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Fisher-Yates, deterministic for a given seed.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = index(i);
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

    /// Per-item child generator: seed xor item index, then one mixing round
    /// so nearby indices do not produce correlated streams.
    static Rng derive(std::uint64_t seed, std::uint64_t item_index) {
        Rng mixer(seed ^ item_index);
        return Rng(mixer.next_u64());
    }

private:
    std::uint64_t state_;
};

}  // namespace l1forge
