#pragma once

#include <cstdint>
#include <limits>

namespace isac {

// splitmix64 stream seeded from (seed, stream). Each Monte Carlo trial gets its
// own stream derived from the trial index, so draws are independent of worker
// count and iteration order: serial and parallel runs agree bit for bit.
class TrialRng {
  public:
    using result_type = std::uint64_t;

    TrialRng(std::uint64_t seed, std::uint64_t stream) {
        state_ = mix(mix(seed) ^ mix(stream * 0xd1342543de82ef95ULL + 0x9e3779b97f4a7c15ULL));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix_out(state_);
    }

    double uniform() {  // in [0,1)
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

  private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        return mix_out(x);
    }
    static std::uint64_t mix_out(std::uint64_t x) {
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    std::uint64_t state_;
};

}  // namespace isac
