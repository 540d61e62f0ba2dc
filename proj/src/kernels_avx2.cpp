// AVX2 variants of the word kernels. Compiled with -mavx2 in its own
// translation unit; only reached after the runtime CPUID check.

#if defined(__x86_64__) || defined(_M_X64)

#include "amalgam/kernels.hpp"

#include <bit>
#include <immintrin.h>

namespace amalgam::kern {

namespace {

void a_and(u64* dst, const u64* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(x, y));
    }
    for (; i < n; ++i) dst[i] &= src[i];
}

void a_or(u64* dst, const u64* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(x, y));
    }
    for (; i < n; ++i) dst[i] |= src[i];
}

void a_andnot(u64* dst, const u64* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        // _mm256_andnot_si256 computes ~first & second
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(y, x));
    }
    for (; i < n; ++i) dst[i] &= ~src[i];
}

// Nibble-LUT popcount accumulated through _mm256_sad_epu8.
inline __m256i vec_popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

u64 a_popcount(const u64* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(vec_popcount_bytes(v), _mm256_setzero_si256()));
    }
    alignas(32) u64 lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    u64 c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) c += static_cast<u64>(std::popcount(a[i]));
    return c;
}

u64 a_popcount_and(const u64* a, const u64* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i v = _mm256_and_si256(x, y);
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(vec_popcount_bytes(v), _mm256_setzero_si256()));
    }
    alignas(32) u64 lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    u64 c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) c += static_cast<u64>(std::popcount(a[i] & b[i]));
    return c;
}

bool a_intersects(const u64* a, const u64* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(x, y)) return true;
    }
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool a_is_subset(const u64* a, const u64* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        // testc: returns 1 iff (~y & x) == 0
        if (!_mm256_testc_si256(y, x)) return false;
    }
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

const Ops kAvx2{a_and, a_or, a_andnot, a_popcount, a_popcount_and, a_intersects, a_is_subset, "avx2"};

}  // namespace

const Ops& avx2_ops() { return kAvx2; }

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

}  // namespace amalgam::kern

#endif  // x86-64
