#include <atomic>
#include <cstdlib>
#include <string_view>

#include "polymin/simd/kernels.hpp"

namespace polymin::simd {
namespace {

const Kernels* detect() {
    if (const char* forced = std::getenv("POLYMIN_SIMD"); forced && std::string_view(forced) == "scalar")
        return &scalar_kernels();
    if (const Kernels* k = avx2_kernels()) return k;
    if (const Kernels* k = neon_kernels()) return k;
    return &scalar_kernels();
}

std::atomic<const Kernels*>& slot() {
    static std::atomic<const Kernels*> current{detect()};
    return current;
}

}  // namespace

const Kernels& active() { return *slot().load(std::memory_order_acquire); }

void set_active(const Kernels& k) { slot().store(&k, std::memory_order_release); }

}  // namespace polymin::simd
