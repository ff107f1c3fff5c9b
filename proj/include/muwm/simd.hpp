#pragma once

// Data-parallel inner loops shared by every module. Each kernel has a scalar
// reference implementation and (on x86-64) an AVX2 variant; the variant is
// chosen once at startup from CPUID and the MUWM_SIMD environment variable
// ("scalar", "avx2" or "auto"), and can be switched for testing.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace muwm::simd {

/// Row storage is padded to a multiple of this many bytes; padding is zero.
inline constexpr std::size_t kLane = 32;

constexpr std::size_t padded(std::size_t n) { return (n + kLane - 1) / kLane * kLane; }

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);

struct KernelTable {
    // Sum of a[i]*b[i] for int8 vectors with entries in {-1,0,1}; n % kLane == 0.
    std::int32_t (*dot_ternary)(const std::int8_t* a, const std::int8_t* b, std::size_t n);
    // out[r] = <q, rows + r*stride> for r < count; stride % kLane == 0.
    void (*dot_rows)(const std::int8_t* q, const std::int8_t* rows, std::size_t count,
                     std::size_t stride, std::int32_t* out);
    // y = (y + c*x) mod 3 over {0,1,2}; c in {1,2}; n % kLane == 0.
    void (*gf3_axpy)(std::uint8_t* y, const std::uint8_t* x, std::uint8_t c, std::size_t n);
    // Number of nonzero bytes; n % kLane == 0.
    std::size_t (*count_nonzero)(const std::uint8_t* v, std::size_t n);
    // out = a & b over 64-bit words, returns popcount(out).
    std::size_t (*and_into)(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t words);
    // popcount(a & b) without storing.
    std::size_t (*and_count)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

const KernelTable& scalar_kernels();
#if defined(MUWM_HAVE_AVX2)
const KernelTable& avx2_kernels();
#endif

bool backend_available(Backend b);

/// Backend in use by kernels().
Backend active_backend();

/// Switches the process-wide backend. Throws std::invalid_argument when the
/// CPU or the build lacks it.
void set_backend(Backend b);

const KernelTable& kernels();

/// RAII override used by the equivalence tests.
class ScopedBackend {
public:
    explicit ScopedBackend(Backend b) : saved_(active_backend()) { set_backend(b); }
    ~ScopedBackend() { set_backend(saved_); }
    ScopedBackend(const ScopedBackend&) = delete;
    ScopedBackend& operator=(const ScopedBackend&) = delete;

private:
    Backend saved_;
};

}  // namespace muwm::simd
