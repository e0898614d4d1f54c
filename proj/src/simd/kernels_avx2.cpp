#include "polymin/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

#define POLYMIN_AVX2 __attribute__((target("avx2")))

namespace polymin::simd {
namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per 256-bit register

inline POLYMIN_AVX2 __m256i load(const Word* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline POLYMIN_AVX2 void store(Word* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

POLYMIN_AVX2 void and_into(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] &= src[i];
}

POLYMIN_AVX2 void or_into(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] |= src[i];
}

POLYMIN_AVX2 void andnot_into(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    // _mm256_andnot_si256(a, b) computes ~a & b.
    for (; i + kLanes <= n; i += kLanes)
        store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
    for (; i < n; ++i) dst[i] &= ~src[i];
}

POLYMIN_AVX2 void invert(Word* dst, std::size_t n) {
    const __m256i ones = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) store(dst + i, _mm256_xor_si256(load(dst + i), ones));
    for (; i < n; ++i) dst[i] = ~dst[i];
}

// Nibble lookup popcount (Mula et al.), accumulated per 64-bit lane with SAD.
POLYMIN_AVX2 std::size_t popcount(const Word* src, std::size_t n) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i v = load(src + i);
        const __m256i lo = _mm256_and_si256(v, low_mask);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    std::size_t total = static_cast<std::size_t>(_mm256_extract_epi64(acc, 0)) +
                        static_cast<std::size_t>(_mm256_extract_epi64(acc, 1)) +
                        static_cast<std::size_t>(_mm256_extract_epi64(acc, 2)) +
                        static_cast<std::size_t>(_mm256_extract_epi64(acc, 3));
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
    return total;
}

POLYMIN_AVX2 bool equal(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i diff = _mm256_xor_si256(load(a + i), load(b + i));
        if (!_mm256_testz_si256(diff, diff)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

POLYMIN_AVX2 bool any(const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256i v = load(src + i);
        if (!_mm256_testz_si256(v, v)) return true;
    }
    for (; i < n; ++i)
        if (src[i] != 0) return true;
    return false;
}

POLYMIN_AVX2 bool subset(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    // testc(b, a) is 1 iff (~b & a) == 0.
    for (; i + kLanes <= n; i += kLanes)
        if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
    for (; i < n; ++i)
        if ((a[i] & ~b[i]) != 0) return false;
    return true;
}

}  // namespace

const Kernels* avx2_kernels() {
    static const bool supported = __builtin_cpu_supports("avx2");
    static const Kernels k{"avx2", and_into, or_into, andnot_into, invert, popcount, equal, any, subset};
    return supported ? &k : nullptr;
}

}  // namespace polymin::simd

#else

namespace polymin::simd {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace polymin::simd

#endif
