/*
 Copyright 2026 The pendroa Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef PENDROA_RANDOM_HPP
#define PENDROA_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "pendroa/model.hpp"

namespace pendroa {

/**
 * @brief SplitMix64 (Steele, Lea & Flood 2014).
 *
 * Used instead of the <random> distributions because those are not
 * bit-reproducible across standard library implementations.
 *
 * Stream splitting: the generator for trial i of a batch seeded with s is
 * SplitMix64::stream(s, i), whose initial state is mix(s + mix(i + 1)).
 * Any trial can therefore be regenerated independently of the others, and a
 * parallel run draws exactly the same numbers as a serial one.
 */
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(mix(seed + mix(index + 1)));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix(state_ += kGamma); }

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform01() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

    /// Uniform on the open interval (lo, hi).
    double uniform(double lo, double hi) {
        double v = lo + (hi - lo) * uniform01();
        if (v >= hi) v = std::nextafter(hi, lo);
        if (v <= lo) v = std::nextafter(lo, hi);
        return v;
    }

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t state_;
};

/// Axis-aligned open box of initial states.
struct SampleDomain {
    double theta_min = -std::numbers::pi;
    double theta_max = std::numbers::pi;
    double omega_min = -10.0;
    double omega_max = 10.0;

    void validate() const {
        if (!(theta_min < theta_max) || !(omega_min < omega_max) || !std::isfinite(theta_min) ||
            !std::isfinite(theta_max) || !std::isfinite(omega_min) || !std::isfinite(omega_max))
            throw std::invalid_argument("sample domain must be a finite, non-empty box");
    }

    [[nodiscard]] bool contains(State x) const {
        return x.theta > theta_min && x.theta < theta_max && x.omega > omega_min && x.omega < omega_max;
    }

    [[nodiscard]] double area() const { return (theta_max - theta_min) * (omega_max - omega_min); }

    /// theta is drawn first, then omega.
    State draw(SplitMix64& rng) const {
        const double theta = rng.uniform(theta_min, theta_max);
        const double omega = rng.uniform(omega_min, omega_max);
        return {theta, omega};
    }
};

} // namespace pendroa

#endif // PENDROA_RANDOM_HPP
