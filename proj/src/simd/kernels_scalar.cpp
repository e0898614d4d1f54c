#include "polymin/simd/kernels.hpp"

#include <bit>

namespace polymin::simd {
namespace {

void and_into(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void or_into(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void andnot_into(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

void invert(Word* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = ~dst[i];
}

std::size_t popcount(const Word* src, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(src[i]));
    return total;
}

bool equal(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool any(const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (src[i] != 0) return true;
    return false;
}

bool subset(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if ((a[i] & ~b[i]) != 0) return false;
    return true;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", and_into, or_into, andnot_into, invert,
                           popcount, equal,    any,     subset};
    return k;
}

}  // namespace polymin::simd
