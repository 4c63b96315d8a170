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

#ifndef PENDROA_MONTECARLO_HPP
#define PENDROA_MONTECARLO_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <vector>

#include "pendroa/csv.hpp"
#include "pendroa/integrate.hpp"
#include "pendroa/model.hpp"
#include "pendroa/random.hpp"
#include "pendroa/roa_analytic.hpp"
#include "pendroa/roa_lyapunov.hpp"

namespace pendroa {

/// Membership of one random initial state in every region of interest.
struct RegionSample {
    std::uint64_t trial = 0;
    State x0;
    bool in_s = false;       ///< converged under the saturated loop
    bool in_s_tilde = false; ///< converged and never torque-limited
    bool in_analytic = false;
    bool in_unbound = false;
    bool in_lyapunov = false;
    bool diverged = false;

    friend bool operator==(const RegionSample&, const RegionSample&) = default;
};

struct TrialBatch {
    SampleDomain domain;
    std::size_t n_trials = 0;
    std::uint64_t seed = 0;
    std::vector<RegionSample> results;
};

/// Initial state of trial @p index: domain.draw(SplitMix64::stream(seed, index)).
inline State trial_state(const SampleDomain& domain, std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng = SplitMix64::stream(seed, index);
    return domain.draw(rng);
}

struct BatchOptions {
    std::size_t n_trials = 20000;
    std::uint64_t seed = 0;
    SampleDomain domain;
    IntegrationConfig integration;
    unsigned threads = 1; ///< 0 = hardware concurrency
};

/**
 * @brief Simulates n i.i.d. uniform initial states and classifies each one.
 *
 * Trials are split into contiguous chunks across threads; results are stored
 * by trial index, so the batch is identical for any thread count.
 * @p lyapunov may be null, in which case in_lyapunov is always false.
 */
inline TrialBatch run_batch(const PendulumParams& p, const GainPair& k, const TorqueLimit& lim,
                            const AnalyticOracle& analytic, const LyapunovOracle* lyapunov,
                            const BatchOptions& opt) {
    if (opt.n_trials == 0) throw std::invalid_argument("run_batch: n_trials must be >= 1");
    opt.domain.validate();
    opt.integration.validate();

    TrialBatch batch;
    batch.domain = opt.domain;
    batch.n_trials = opt.n_trials;
    batch.seed = opt.seed;
    batch.results.resize(opt.n_trials);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            RegionSample& r = batch.results[i];
            r.trial = i;
            r.x0 = trial_state(opt.domain, opt.seed, i);
            const TrajectoryOutcome out = classify(p, k, lim, r.x0, opt.integration);
            r.in_s = out.converged;
            r.in_s_tilde = out.converged && !out.torque_limited;
            r.diverged = out.diverged;
            r.in_unbound = analytic.contains_unbounded(r.x0);
            r.in_analytic = r.in_unbound && analytic.heuristic_ok(r.x0);
            r.in_lyapunov = lyapunov != nullptr && lyapunov->contains(r.x0);
        }
    };

    unsigned threads = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, opt.n_trials));
    if (threads <= 1) {
        work(0, opt.n_trials);
        return batch;
    }

    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (opt.n_trials + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(opt.n_trials, begin + chunk);
            pool.emplace_back([&, t, begin, end] {
                try {
                    work(begin, end);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return batch;
}

enum class Region : std::size_t { S, STilde, Analytic, Unbound, Lyapunov };
inline constexpr std::size_t kRegionCount = 5;
inline constexpr std::array<std::string_view, kRegionCount> kRegionNames = {
    "S", "S_tilde", "S_analytic", "S_unbound", "S_lyapunov"};

inline bool in_region(const RegionSample& r, Region region) {
    switch (region) {
    case Region::S: return r.in_s;
    case Region::STilde: return r.in_s_tilde;
    case Region::Analytic: return r.in_analytic;
    case Region::Unbound: return r.in_unbound;
    case Region::Lyapunov: return r.in_lyapunov;
    }
    return false;
}

/// Counts per region (diagonal) and pairwise intersections (off-diagonal).
struct RegionSummary {
    std::size_t n_trials = 0;
    std::array<std::array<std::size_t, kRegionCount>, kRegionCount> overlap{};

    [[nodiscard]] std::size_t count(Region r) const {
        const auto i = static_cast<std::size_t>(r);
        return overlap[i][i];
    }
    [[nodiscard]] std::size_t both(Region a, Region b) const {
        return overlap[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    [[nodiscard]] double fraction(Region r) const {
        return n_trials == 0 ? 0.0 : static_cast<double>(count(r)) / static_cast<double>(n_trials);
    }
    /// Samples claimed by @p estimate that did not converge.
    [[nodiscard]] std::size_t false_positives(Region estimate) const {
        return count(estimate) - both(estimate, Region::S);
    }
};

inline RegionSummary region_summary(const TrialBatch& batch) {
    RegionSummary s;
    s.n_trials = batch.results.size();
    for (const RegionSample& r : batch.results) {
        std::array<bool, kRegionCount> in{};
        for (std::size_t i = 0; i < kRegionCount; ++i) in[i] = in_region(r, static_cast<Region>(i));
        for (std::size_t i = 0; i < kRegionCount; ++i)
            for (std::size_t j = 0; j < kRegionCount; ++j) s.overlap[i][j] += (in[i] && in[j]) ? 1 : 0;
    }
    return s;
}

/// N_analytic / N_lyapunov. Throws std::domain_error when N_lyapunov = 0.
inline double relative_area(const TrialBatch& batch) {
    const RegionSummary s = region_summary(batch);
    if (s.count(Region::Lyapunov) == 0)
        throw std::domain_error("relative_area: no samples inside the Lyapunov estimate");
    return static_cast<double>(s.count(Region::Analytic)) / static_cast<double>(s.count(Region::Lyapunov));
}

inline void write_batch_csv(const TrialBatch& batch, std::ostream& os) {
    CsvWriter csv(os);
    csv.header({"theta0", "omega0", "in_s", "in_s_tilde", "in_analytic", "in_unbound", "in_lyapunov"});
    for (const RegionSample& r : batch.results) {
        csv.field(r.x0.theta).field(r.x0.omega).field(r.in_s).field(r.in_s_tilde);
        csv.field(r.in_analytic).field(r.in_unbound).field(r.in_lyapunov);
        csv.end_row();
    }
}

} // namespace pendroa

#endif // PENDROA_MONTECARLO_HPP
