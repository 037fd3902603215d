#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qpd {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic seeded RNG stream. mt19937_64 supplies the raw bits (its
/// output sequence is fixed by the standard); all variate transforms are
/// implemented here so results are identical across platforms and stdlibs.
/// Independent streams are derived from (master seed, salt) pairs, which is
/// what makes per-sequence / per-segment parallelism reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    static Rng stream(uint64_t master, uint64_t salt1, uint64_t salt2 = 0) {
        uint64_t s = splitmix64(master ^ splitmix64(salt1 + 0x632be59bd9b4e019ULL));
        return Rng(splitmix64(s ^ splitmix64(salt2 + 0x9e3779b97f4a7c15ULL)));
    }

    uint64_t bits() { return eng_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    /// Exponential with the given mean (inverse CDF).
    double exponential(double mean) { return -mean * std::log1p(-uniform()); }

    /// Standard Box-Muller; the spare value is cached.
    double normal(double mean = 0.0, double sd = 1.0) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + sd * spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return mean + sd * r * std::cos(a);
    }

    /// Uniform integer in [0, bound) by rejection.
    uint64_t integer(uint64_t bound) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x = eng_();
        while (x >= limit) x = eng_();
        return x % bound;
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace qpd
