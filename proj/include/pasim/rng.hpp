#pragma once

#include <cmath>
#include <cstdint>

namespace pasim {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Stream labels for derived substreams. Streams must never alias, so every
// consumer of randomness gets its own domain tag.
enum class Stream : std::uint64_t {
    Noise = 1,
    CcdmBits = 2,
    SignBits = 3,
    IidAmplitudes = 4,
};

// Counter-based derivation: one base seed plus (domain, a, b) identifies a
// substream independently of thread assignment, so parallel and serial runs
// draw identical noise.
inline std::uint64_t derive_stream(std::uint64_t seed, Stream domain,
                                   std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = seed;
    for (std::uint64_t v : {static_cast<std::uint64_t>(domain), a, b}) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        splitmix64_next(h);
    }
    return h;
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    // Uniform in (0, 1]; never 0 so it is safe inside log().
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    int next_bit() { return static_cast<int>(next_u64() >> 63); }

    // Box-Muller; explicit formula keeps output identical across platforms,
    // unlike std::normal_distribution.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace pasim
