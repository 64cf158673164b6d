// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#include "hexprob/mc_kernel.hpp"
#include "hexprob/monte_carlo.hpp"
#include "hexprob/rng.hpp"

namespace hexprob::mc {

// Reference kernel. Every floating-point operation here, in order, is the
// sampling/classification contract; run_batch_avx2 replays the same sequence
// four lanes wide and must match it bit for bit.
BatchResult run_batch_scalar(std::uint64_t first, std::uint64_t count,
                             const BatchOptions& opt, SampleRecord* records) {
    BatchResult res;
    for (std::uint64_t k = 0; k < count; ++k) {
        SplitMix64 rng(sample_stream_seed(opt.seed, first + k));
        const Vec3 v = detail::draw_unit_vector(rng, opt.redraw_threshold);
        const SectionKind kind = detail::classify_sorted(
            detail::sorted_abs_components(v.x, v.y, v.z), opt.eps_boundary);
        if (kind == SectionKind::Hexagon) {
            ++res.hits;
        }
        if (opt.check_negation) {
            const SectionKind negated = detail::classify_sorted(
                detail::sorted_abs_components(-v.x, -v.y, -v.z), opt.eps_boundary);
            if (negated != kind) {
                ++res.negation_mismatches;
            }
        }
        if (records != nullptr) {
            records[k] = {v.x, v.y, v.z, static_cast<std::uint8_t>(kind)};
        }
    }
    return res;
}

}  // namespace hexprob::mc
