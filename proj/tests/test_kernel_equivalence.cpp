// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hexprob/mc_kernel.hpp"
#include "hexprob/monte_carlo.hpp"

using namespace hexprob;

namespace {

// Field-wise comparison. Never memcmp SampleRecord: the struct has trailing
// padding whose bytes are unspecified after aggregate assignment.
bool records_identical(const std::vector<mc::SampleRecord>& a,
                       const std::vector<mc::SampleRecord>& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::bit_cast<std::uint64_t>(a[i].x) != std::bit_cast<std::uint64_t>(b[i].x) ||
            std::bit_cast<std::uint64_t>(a[i].y) != std::bit_cast<std::uint64_t>(b[i].y) ||
            std::bit_cast<std::uint64_t>(a[i].z) != std::bit_cast<std::uint64_t>(b[i].z) ||
            a[i].kind != b[i].kind) {
            return false;
        }
    }
    return true;
}

struct KernelGuard {
    mc::KernelKind saved = mc::active_kernel();
    ~KernelGuard() { mc::set_active_kernel(saved); }
};

}  // namespace

#if defined(HEXPROB_HAVE_AVX2)

TEST_CASE("AVX2 kernel is bit-identical to the scalar reference") {
    if (!mc::kernel_available(mc::KernelKind::Avx2)) {
        MESSAGE("CPU lacks AVX2, skipping");
        return;
    }
    for (std::uint64_t seed : {1ull, 42ull}) {
        for (std::uint64_t count : {1ull, 3ull, 4ull, 5ull, 8ull, 1000ull, 4097ull}) {
            for (bool neg : {false, true}) {
                mc::BatchOptions opt;
                opt.seed = seed;
                opt.check_negation = neg;
                std::vector<mc::SampleRecord> sc(count), av(count);
                const mc::BatchResult rs = mc::run_batch_scalar(0, count, opt, sc.data());
                const mc::BatchResult ra = mc::run_batch_avx2(0, count, opt, av.data());
                CHECK(rs.hits == ra.hits);
                CHECK(rs.negation_mismatches == 0);
                CHECK(ra.negation_mismatches == 0);
                CHECK(records_identical(sc, av));
            }
        }
    }
}

TEST_CASE("AVX2 kernel matches on offset ranges") {
    if (!mc::kernel_available(mc::KernelKind::Avx2)) {
        MESSAGE("CPU lacks AVX2, skipping");
        return;
    }
    mc::BatchOptions opt;
    opt.seed = 42;
    std::vector<mc::SampleRecord> sc(777), av(777);
    const mc::BatchResult rs = mc::run_batch_scalar(123456, 777, opt, sc.data());
    const mc::BatchResult ra = mc::run_batch_avx2(123456, 777, opt, av.data());
    CHECK(rs.hits == ra.hits);
    CHECK(records_identical(sc, av));
}

TEST_CASE("AVX2 kernel matches through the redraw path") {
    if (!mc::kernel_available(mc::KernelKind::Avx2)) {
        MESSAGE("CPU lacks AVX2, skipping");
        return;
    }
    for (std::uint64_t seed : {7ull, 99ull}) {
        mc::BatchOptions opt;
        opt.seed = seed;
        opt.redraw_threshold = 0.5;  // forces redraws on a few percent of draws
        const std::uint64_t count = 5000;
        std::vector<mc::SampleRecord> sc(count), av(count), plain(count);
        const mc::BatchResult rs = mc::run_batch_scalar(0, count, opt, sc.data());
        const mc::BatchResult ra = mc::run_batch_avx2(0, count, opt, av.data());
        CHECK(rs.hits == ra.hits);
        CHECK(records_identical(sc, av));

        // The raised threshold must actually engage: records diverge from the
        // production-threshold run.
        mc::BatchOptions base;
        base.seed = seed;
        mc::run_batch_scalar(0, count, base, plain.data());
        CHECK(!records_identical(sc, plain));
    }
}

TEST_CASE("kernel selection is explicit and reversible") {
    if (!mc::kernel_available(mc::KernelKind::Avx2)) {
        MESSAGE("CPU lacks AVX2, skipping");
        return;
    }
    KernelGuard guard;
    mc::BatchOptions opt;
    opt.seed = 4;
    std::vector<mc::SampleRecord> via_dispatch(64), reference(64);

    mc::set_active_kernel(mc::KernelKind::Scalar);
    CHECK(mc::active_kernel() == mc::KernelKind::Scalar);
    const mc::BatchResult rd = mc::run_batch(0, 64, opt, via_dispatch.data());
    const mc::BatchResult rr = mc::run_batch_scalar(0, 64, opt, reference.data());
    CHECK(rd.hits == rr.hits);
    CHECK(records_identical(via_dispatch, reference));

    mc::set_active_kernel(mc::KernelKind::Avx2);
    CHECK(mc::active_kernel() == mc::KernelKind::Avx2);
}

TEST_CASE("estimate is kernel independent") {
    if (!mc::kernel_available(mc::KernelKind::Avx2)) {
        MESSAGE("CPU lacks AVX2, skipping");
        return;
    }
    KernelGuard guard;
    RunConfig cfg;
    cfg.samples = 20000;
    cfg.seed = 42;
    cfg.chunks = 4;
    mc::set_active_kernel(mc::KernelKind::Avx2);
    const Estimate wide = estimate(cfg);
    mc::set_active_kernel(mc::KernelKind::Scalar);
    const Estimate narrow = estimate(cfg);
    CHECK(wide.hits == narrow.hits);
    CHECK(wide.p_hat == narrow.p_hat);
}

#else

TEST_CASE("unavailable kernels are rejected") {
    CHECK(!mc::kernel_available(mc::KernelKind::Avx2));
    CHECK(mc::active_kernel() == mc::KernelKind::Scalar);
    CHECK_THROWS_AS(mc::set_active_kernel(mc::KernelKind::Avx2), InvalidConfig);
}

#endif

TEST_CASE("the scalar kernel is always available") {
    CHECK(mc::kernel_available(mc::KernelKind::Scalar));
    CHECK(std::string(mc::to_string(mc::KernelKind::Scalar)) == "scalar");
    CHECK(std::string(mc::to_string(mc::KernelKind::Avx2)) == "avx2");
}
