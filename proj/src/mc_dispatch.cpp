// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <string>

#include "hexprob/errors.hpp"
#include "hexprob/mc_kernel.hpp"

namespace hexprob::mc {

namespace {

bool cpu_has_avx2() {
#if defined(HEXPROB_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

std::atomic<KernelKind> g_active{cpu_has_avx2() ? KernelKind::Avx2 : KernelKind::Scalar};

}  // namespace

const char* to_string(KernelKind kind) {
    switch (kind) {
        case KernelKind::Scalar: return "scalar";
        case KernelKind::Avx2: return "avx2";
    }
    return "unknown";
}

bool kernel_available(KernelKind kind) {
    switch (kind) {
        case KernelKind::Scalar: return true;
        case KernelKind::Avx2: return cpu_has_avx2();
    }
    return false;
}

KernelKind active_kernel() {
    return g_active.load(std::memory_order_relaxed);
}

void set_active_kernel(KernelKind kind) {
    if (!kernel_available(kind)) {
        throw InvalidConfig(std::string("kernel not available on this build/CPU: ") +
                            to_string(kind));
    }
    g_active.store(kind, std::memory_order_relaxed);
}

BatchResult run_batch(std::uint64_t first, std::uint64_t count,
                      const BatchOptions& opt, SampleRecord* records) {
#if defined(HEXPROB_HAVE_AVX2)
    if (active_kernel() == KernelKind::Avx2) {
        return run_batch_avx2(first, count, opt, records);
    }
#endif
    return run_batch_scalar(first, count, opt, records);
}

}  // namespace hexprob::mc
