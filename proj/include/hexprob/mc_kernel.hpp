// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "hexprob/geometry.hpp"

namespace hexprob::mc {

// Batch sampling/classification kernels. The scalar kernel is the reference;
// the AVX2 kernel is selected at runtime when the CPU supports it and is
// required to produce bit-identical output (same hits, same sample records)
// for every input. The equivalence suite enforces that.

enum class KernelKind {
    Scalar,
    Avx2,
};

const char* to_string(KernelKind kind);

struct BatchOptions {
    std::uint64_t seed = 0;
    double eps_boundary = 1e-12;
    bool check_negation = false;
    // Redraw threshold for near-zero Gaussian triples. 1e-6 in production;
    // equivalence tests raise it to force the redraw path.
    double redraw_threshold = 1e-6;
};

/// Per-sample output, written when a record buffer is supplied.
struct SampleRecord {
    double x, y, z;
    std::uint8_t kind;  // SectionKind value
};

struct BatchResult {
    std::uint64_t hits = 0;
    std::uint64_t negation_mismatches = 0;
};

/// Process global sample indices [first, first + count). `records`, if
/// non-null, receives `count` entries.
BatchResult run_batch_scalar(std::uint64_t first, std::uint64_t count,
                             const BatchOptions& opt, SampleRecord* records);

#if defined(HEXPROB_HAVE_AVX2)
BatchResult run_batch_avx2(std::uint64_t first, std::uint64_t count,
                           const BatchOptions& opt, SampleRecord* records);
#endif

bool kernel_available(KernelKind kind);

/// Kernel used by run_batch(). Defaults to the widest available.
KernelKind active_kernel();

/// Throws InvalidConfig if the kernel was not compiled in or the CPU lacks it.
void set_active_kernel(KernelKind kind);

BatchResult run_batch(std::uint64_t first, std::uint64_t count,
                      const BatchOptions& opt, SampleRecord* records = nullptr);

}  // namespace hexprob::mc
