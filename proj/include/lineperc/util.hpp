#ifndef LINEPERC_UTIL_HPP
#define LINEPERC_UTIL_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace lineperc {

inline unsigned long long binom_ull(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= (unsigned long long)(n - k + i);
        den *= (unsigned long long)i;
        unsigned long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

inline uint64_t splitmix64_mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Per-trial seed stream: hash-split of the master seed by trial index, so
/// trials are order-independent and runs parallelize without changing
/// results.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    return splitmix64_mix(master ^ splitmix64_mix(index + 1));
}

/// Seeded generator: mt19937_64 stream with our own value mappings, so
/// sequences are identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t u64() { return gen_(); }

    /// Uniform integer in [0, n), unbiased via rejection.
    int below(int n) {
        uint64_t bound = uint64_t(n);
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do { x = gen_(); } while (x >= limit);
        return int(x % bound);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double unit() { return double(gen_() >> 11) * 0x1.0p-53; }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = int(v.size()) - 1; i > 0; --i) std::swap(v[size_t(i)], v[size_t(below(i + 1))]);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace lineperc

#endif
