#pragma once
#include <cstdint>
#include <random>
#include <vector>

namespace vcw {

// Seeded generator with helpers that avoid std::uniform_int_distribution,
// whose output differs across standard libraries; results are then
// reproducible from the seed alone on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
    int below(int bound) {
        const std::uint64_t b = static_cast<std::uint64_t>(bound);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
        std::uint64_t x = eng_();
        while (x >= limit) x = eng_();
        return static_cast<int>(x % b);
    }

    bool chance(double p) {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p;
    }

    // Fisher-Yates.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            int j = below(i + 1);
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace vcw
