#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace listpack {

/// Keyed counter-based generator. Output i of stream (seed, stream) is
/// mix64(key + (i + 1) * golden) with key = mix64(seed ^ mix64(stream)), where
/// mix64 is the SplitMix64 finaliser. Any stream can be opened directly, so
/// Monte Carlo trial t uses stream t and results do not depend on how trials
/// are scheduled across threads.
class CounterRng {
  public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : key_(mix64(seed ^ mix64(stream + kStreamSalt))) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() { return mix64(key_ + (++counter_) * kGolden); }

    /// Uniform integer in [0, bound), bound >= 1 (Lemire's multiply-shift
    /// with rejection, so no modulo bias).
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t x = (*this)();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                x = (*this)();
                m = static_cast<unsigned __int128>(x) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    /// Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    std::uint64_t counter() const { return counter_; }

    static constexpr std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kStreamSalt = 0x632BE59BD9B4E019ULL;

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace listpack
