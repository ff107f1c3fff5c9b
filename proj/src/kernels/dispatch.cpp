#include "muwm/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace muwm::simd {
namespace {

bool cpu_has_avx2() {
#if defined(MUWM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

const KernelTable& table_for(Backend b) {
#if defined(MUWM_HAVE_AVX2)
    if (b == Backend::Avx2) return avx2_kernels();
#endif
    (void)b;
    return scalar_kernels();
}

Backend initial_backend() {
    const char* env = std::getenv("MUWM_SIMD");
    std::string choice = env ? env : "auto";
    if (choice == "scalar") return Backend::Scalar;
    if (choice == "avx2" && !cpu_has_avx2())
        throw std::runtime_error("MUWM_SIMD=avx2 requested but AVX2 is unavailable");
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

struct State {
    std::atomic<Backend> backend;
    std::atomic<const KernelTable*> table;
    State() {
        Backend b = initial_backend();
        backend.store(b);
        table.store(&table_for(b));
    }
};

State& state() {
    static State s;
    return s;
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) { return b == Backend::Scalar || cpu_has_avx2(); }

Backend active_backend() { return state().backend.load(std::memory_order_acquire); }

void set_backend(Backend b) {
    if (!backend_available(b))
        throw std::invalid_argument("SIMD backend not available: " + std::string(backend_name(b)));
    state().table.store(&table_for(b), std::memory_order_release);
    state().backend.store(b, std::memory_order_release);
}

const KernelTable& kernels() { return *state().table.load(std::memory_order_acquire); }

}  // namespace muwm::simd
