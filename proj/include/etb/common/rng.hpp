#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace etb {

// Seeded RNG with explicitly coded variate transforms so that streams are
// reproducible bit-for-bit across reruns of the same binary.
// std::normal_distribution keeps hidden state between calls; this does not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    // Uniform integer in [0, n). Modulo bias is < 2^-53 for any n we use.
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(u01() * static_cast<double>(n));
    }

    // Box-Muller, always computed as a fresh pair; the cosine twin is dropped.
    double normal() {
        double u1 = u01();
        while (u1 <= 0.0) u1 = u01();
        const double u2 = u01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return r * std::sin(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Fisher-Yates with this stream.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // Derive an independent child stream (per-episode, per-worker seeds).
    Rng fork(std::uint64_t salt) {
        return Rng(gen_() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace etb
