#pragma once

// Word-level set algebra used by Bitset. Each backend implements the same
// table; the active one is chosen once at startup from the CPU features.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace polymin::simd {

using Word = std::uint64_t;

struct Kernels {
    std::string_view name;
    void (*and_into)(Word* dst, const Word* src, std::size_t n);
    void (*or_into)(Word* dst, const Word* src, std::size_t n);
    void (*andnot_into)(Word* dst, const Word* src, std::size_t n);  // dst &= ~src
    void (*invert)(Word* dst, std::size_t n);
    std::size_t (*popcount)(const Word* src, std::size_t n);
    bool (*equal)(const Word* a, const Word* b, std::size_t n);
    bool (*any)(const Word* src, std::size_t n);
    bool (*subset)(const Word* a, const Word* b, std::size_t n);  // a ⊆ b
};

const Kernels& scalar_kernels();

/// Null when the build or the CPU lacks AVX2.
const Kernels* avx2_kernels();

/// Null unless built for AArch64.
const Kernels* neon_kernels();

/// The backend in use. Resolved on first call; the environment variable
/// POLYMIN_SIMD=scalar forces the reference kernels.
const Kernels& active();

/// Overrides the backend; intended for tests and benchmarks.
void set_active(const Kernels& k);

}  // namespace polymin::simd
