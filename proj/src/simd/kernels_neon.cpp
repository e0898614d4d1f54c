#include "polymin/simd/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace polymin::simd {
namespace {

constexpr std::size_t kLanes = 2;

void and_into(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < n; ++i) dst[i] &= src[i];
}

void or_into(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < n; ++i) dst[i] |= src[i];
}

void andnot_into(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    // vbicq(a, b) computes a & ~b.
    for (; i + kLanes <= n; i += kLanes) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < n; ++i) dst[i] &= ~src[i];
}

void invert(Word* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        vst1q_u64(dst + i, vreinterpretq_u64_u8(vmvnq_u8(vreinterpretq_u8_u64(vld1q_u64(dst + i)))));
    for (; i < n; ++i) dst[i] = ~dst[i];
}

std::size_t popcount(const Word* src, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        total += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(src + i))));
    for (; i < n; ++i) total += static_cast<std::size_t>(__builtin_popcountll(src[i]));
    return total;
}

bool equal(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const uint64x2_t diff = veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if ((vgetq_lane_u64(diff, 0) | vgetq_lane_u64(diff, 1)) != 0) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool any(const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes)
        if (vmaxvq_u32(vreinterpretq_u32_u64(vld1q_u64(src + i))) != 0) return true;
    for (; i < n; ++i)
        if (src[i] != 0) return true;
    return false;
}

bool subset(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const uint64x2_t extra = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if ((vgetq_lane_u64(extra, 0) | vgetq_lane_u64(extra, 1)) != 0) return false;
    }
    for (; i < n; ++i)
        if ((a[i] & ~b[i]) != 0) return false;
    return true;
}

}  // namespace

const Kernels* neon_kernels() {
    static const Kernels k{"neon", and_into, or_into, andnot_into, invert, popcount, equal, any, subset};
    return &k;
}

}  // namespace polymin::simd

#else

namespace polymin::simd {
const Kernels* neon_kernels() { return nullptr; }
}  // namespace polymin::simd

#endif
