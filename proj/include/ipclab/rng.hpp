#pragma once

#include <cstdint>
#include <random>

namespace ipclab {

// splitmix64; used to decorrelate (seed, stream) pairs before seeding the
// engine so that nearby stream ids do not produce overlapping state.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// One independent random stream. Simulations derive one stream per trial from
// (seed, trial index), so results do not depend on thread count or schedule.
class RngStream {
  public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{
            static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(mix64(stream)),
            static_cast<std::uint32_t>(mix64(stream) >> 32),
            static_cast<std::uint32_t>(mix64(seed ^ (stream * 0x9e3779b97f4a7c15ull)))};
        eng_.seed(seq);
    }

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return eng_(); }

    // uniform on [0, 1), 53 random bits
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // uniform on (0, 1); never returns an endpoint
    double uniform_pos() {
        for (;;) {
            double u = uniform01();
            if (u > 0.0) return u;
        }
    }

    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace ipclab
