#pragma once

// Word-level kernels for the bitset machinery underneath the solvers.
// Every operation has a scalar reference implementation and, on x86-64,
// an AVX2 variant selected once at startup. Selection can be overridden
// (tests run both paths and compare).

#include <cstddef>
#include <cstdint>

namespace amalgam::kern {

using u64 = std::uint64_t;

struct Ops {
    void (*bit_and)(u64* dst, const u64* src, std::size_t nwords);
    void (*bit_or)(u64* dst, const u64* src, std::size_t nwords);
    void (*bit_andnot)(u64* dst, const u64* src, std::size_t nwords);  // dst &= ~src
    u64 (*popcount)(const u64* a, std::size_t nwords);
    u64 (*popcount_and)(const u64* a, const u64* b, std::size_t nwords);
    bool (*intersects)(const u64* a, const u64* b, std::size_t nwords);
    bool (*is_subset)(const u64* a, const u64* b, std::size_t nwords);  // a ⊆ b
    const char* name;
};

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
bool cpu_has_avx2();
#endif

enum class Dispatch { Auto, ForceScalar };

// Active implementation; Auto picks the widest supported one.
const Ops& ops();
void set_dispatch(Dispatch d);
const char* active_kernel_name();

}  // namespace amalgam::kern
