#ifndef TSD_RANDOM_HPP
#define TSD_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace tsd {

/// splitmix64: tiny counter-style generator with a fully specified update,
/// so streams are reproducible across compilers and schedules.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in (0, 1].
    double next_unit() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Deterministic N(0,1) stream via Box-Muller on a SplitMix64 substream.
/// The substream is derived from (seed, stream_id) only, so ensemble members
/// draw identical noise regardless of execution order.
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t stream_id)
        : rng_(mix(seed, stream_id)) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = rng_.next_unit();
        const double u2 = rng_.next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream_id) {
        // run the key through one splitmix round so nearby ids decorrelate
        SplitMix64 h(seed ^ (0x94d049bb133111ebULL * (stream_id + 1)));
        return h.next();
    }

    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace tsd

#endif
