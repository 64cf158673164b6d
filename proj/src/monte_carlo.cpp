// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#include "hexprob/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <utility>
#include <vector>

#include "hexprob/errors.hpp"
#include "hexprob/mc_kernel.hpp"

namespace hexprob {

namespace {

void require_valid(const RunConfig& cfg) {
    if (cfg.samples < 1) {
        throw InvalidConfig("samples must be >= 1");
    }
    if (cfg.chunks < 1) {
        throw InvalidConfig("chunks must be >= 1");
    }
    if (cfg.samples < cfg.chunks) {
        throw InvalidConfig("samples must be >= chunks");
    }
}

// Chunk c covers the contiguous index range starting at
// c*base + min(c, rem), rem extra samples going to the first chunks.
std::pair<std::uint64_t, std::uint64_t> chunk_range(std::uint64_t c,
                                                    std::uint64_t samples,
                                                    std::uint64_t chunks) {
    const std::uint64_t base = samples / chunks;
    const std::uint64_t rem = samples % chunks;
    const std::uint64_t begin = c * base + std::min(c, rem);
    const std::uint64_t size = base + (c < rem ? 1 : 0);
    return {begin, size};
}

Estimate run(const RunConfig& cfg, bool check_negation) {
    require_valid(cfg);
    mc::BatchOptions opt;
    opt.seed = cfg.seed;
    opt.eps_boundary = cfg.tolerance.eps_boundary;
    opt.check_negation = check_negation;

    // Every sample is a pure function of (seed, index), so the partition into
    // chunks and the thread schedule cannot change any count; they only bound
    // the parallelism.
    std::vector<mc::BatchResult> partial(cfg.chunks);
    const unsigned hw = std::thread::hardware_concurrency();
    const std::uint64_t workers =
        std::min<std::uint64_t>(cfg.chunks, hw != 0 ? hw : 1);

    if (workers <= 1) {
        for (std::uint64_t c = 0; c < cfg.chunks; ++c) {
            const auto [begin, size] = chunk_range(c, cfg.samples, cfg.chunks);
            partial[c] = mc::run_batch(begin, size, opt, nullptr);
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
                    if (c >= cfg.chunks) {
                        return;
                    }
                    const auto [begin, size] = chunk_range(c, cfg.samples, cfg.chunks);
                    partial[c] = mc::run_batch(begin, size, opt, nullptr);
                }
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    std::uint64_t hits = 0;
    std::uint64_t mismatches = 0;
    for (std::uint64_t c = 0; c < cfg.chunks; ++c) {  // reduce in chunk order
        hits += partial[c].hits;
        mismatches += partial[c].negation_mismatches;
    }
    if (check_negation && mismatches != 0) {
        throw SymmetryViolation("sample and its negation classified differently");
    }

    Estimate e;
    e.samples = cfg.samples;
    e.hits = hits;
    e.seed = cfg.seed;
    e.chunks = cfg.chunks;
    e.p_hat = static_cast<double>(hits) / static_cast<double>(cfg.samples);
    e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(cfg.samples));
    return e;
}

}  // namespace

Vec3 sample_unit_vector(SplitMix64& rng) {
    return detail::draw_unit_vector(rng, detail::kRedrawThreshold);
}

Vec3 sample_at(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng(sample_stream_seed(seed, index));
    return detail::draw_unit_vector(rng, detail::kRedrawThreshold);
}

Estimate estimate(const RunConfig& cfg) {
    return run(cfg, false);
}

Estimate estimate_with_negation_antithetic(const RunConfig& cfg) {
    return run(cfg, true);
}

}  // namespace hexprob
