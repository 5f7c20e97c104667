#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace mopg {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Role of a stream within one training episode. The returns batch (tau_j)
// and the gradient batch (tau_i) must never share a stream.
enum class StreamPurpose : std::uint64_t {
    returns_batch = 0,
    gradient_batch = 1,
    eval_batch = 2,
    policy_init = 3,
    diagnostic = 4,
};

// Key of the per-trajectory stream (master_seed, episode, purpose, index).
// Serial and parallel sampling agree because each trajectory owns a stream
// addressed by its index, not by draw order.
constexpr std::uint64_t stream_key(std::uint64_t master_seed, std::uint64_t episode,
                                   StreamPurpose purpose, std::uint64_t index) noexcept {
    std::uint64_t k = mix64(master_seed);
    k = mix64(k ^ mix64(episode + 0x1000));
    k = mix64(k ^ mix64(static_cast<std::uint64_t>(purpose) + 0x2000));
    k = mix64(k ^ mix64(index + 0x3000));
    return k;
}

// Deterministic random stream. All samplers draw through the raw engine
// output only, so sequences are identical across platforms and build modes
// (std::random distributions are implementation-defined and not used).
class RngStream {
  public:
    explicit RngStream(std::uint64_t key) : engine_(key) {}

    static RngStream derive(std::uint64_t master_seed, std::uint64_t episode,
                            StreamPurpose purpose, std::uint64_t index) {
        return RngStream(stream_key(master_seed, episode, purpose, index));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double uniform01_open_low() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    // Index drawn from a probability row; walks the running sum in index
    // order so cached and on-the-fly cumulative rows sample identically.
    int categorical(std::span<const double> probs) {
        const double u = uniform01();
        double cum = 0.0;
        const int n = static_cast<int>(probs.size());
        for (int i = 0; i < n; ++i) {
            cum += probs[i];
            if (u < cum) return i;
        }
        return n - 1;
    }

    // Index i with cum[i-1] <= u < cum[i] over a precomputed running sum.
    int categorical_cum(std::span<const double> cum) {
        const double u = uniform01();
        const int n = static_cast<int>(cum.size());
        for (int i = 0; i < n; ++i) {
            if (u < cum[i]) return i;
        }
        return n - 1;
    }

    // Poisson count by inversion of the CDF; one uniform per draw.
    int poisson(double lambda) {
        const double u = uniform01();
        double pmf = std::exp(-lambda);
        double cdf = pmf;
        int k = 0;
        while (u >= cdf && k < 100000) {
            ++k;
            pmf *= lambda / static_cast<double>(k);
            cdf += pmf;
        }
        return k;
    }

    // Box-Muller; consumes exactly two uniforms per call.
    double normal(double mean = 0.0, double stddev = 1.0) {
        const double u1 = uniform01_open_low();
        const double u2 = uniform01();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
        return mean + stddev * z;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace mopg
