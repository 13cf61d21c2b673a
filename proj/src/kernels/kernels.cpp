#include "fock/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace fock::kernels {

#if defined(FOCK_HAVE_AVX2_TU)
const Ops& avx2_ops_table();  // defined in kernels_avx2.cpp
#endif

namespace {

bool cpu_has_avx2() {
#if defined(FOCK_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

std::atomic<const Ops*> g_forced{nullptr};

}  // namespace

const Ops* avx2_ops_if_available() {
#if defined(FOCK_HAVE_AVX2_TU)
    static const bool ok = cpu_has_avx2();
    return ok ? &avx2_ops_table() : nullptr;
#else
    return nullptr;
#endif
}

const Ops& active_ops() {
    const Ops* forced = g_forced.load(std::memory_order_relaxed);
    if (forced) return *forced;
    if (const Ops* v = avx2_ops_if_available()) return *v;
    return scalar_ops();
}

void force_isa(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            g_forced.store(&scalar_ops(), std::memory_order_relaxed);
            return;
        case Isa::avx2:
            if (const Ops* v = avx2_ops_if_available()) {
                g_forced.store(v, std::memory_order_relaxed);
                return;
            }
            throw std::invalid_argument("kernels: avx2 not available on this machine/build");
    }
    throw std::invalid_argument("kernels: unknown isa");
}

void reset_isa() { g_forced.store(nullptr, std::memory_order_relaxed); }

std::vector<const Ops*> available_ops() {
    std::vector<const Ops*> out{&scalar_ops()};
    if (const Ops* v = avx2_ops_if_available()) out.push_back(v);
    return out;
}

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "?";
}

}  // namespace fock::kernels
