#include "amalgam/kernels.hpp"

#include <atomic>
#include <bit>

namespace amalgam::kern {

namespace {

void s_and(u64* dst, const u64* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void s_or(u64* dst, const u64* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void s_andnot(u64* dst, const u64* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

u64 s_popcount(const u64* a, std::size_t n) {
    u64 c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<u64>(std::popcount(a[i]));
    return c;
}

u64 s_popcount_and(const u64* a, const u64* b, std::size_t n) {
    u64 c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<u64>(std::popcount(a[i] & b[i]));
    return c;
}

bool s_intersects(const u64* a, const u64* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool s_is_subset(const u64* a, const u64* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

const Ops kScalar{s_and, s_or, s_andnot, s_popcount, s_popcount_and, s_intersects, s_is_subset, "scalar"};

std::atomic<const Ops*> g_active{nullptr};

const Ops* pick_auto() {
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2()) return &avx2_ops();
#endif
    return &kScalar;
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

const Ops& ops() {
    const Ops* p = g_active.load(std::memory_order_acquire);
    if (!p) {
        p = pick_auto();
        g_active.store(p, std::memory_order_release);
    }
    return *p;
}

void set_dispatch(Dispatch d) {
    g_active.store(d == Dispatch::ForceScalar ? &kScalar : pick_auto(), std::memory_order_release);
}

const char* active_kernel_name() { return ops().name; }

}  // namespace amalgam::kern
