#include "muwm/simd.hpp"

#include <bit>

namespace muwm::simd {
namespace {

std::int32_t dot_ternary_scalar(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
    std::int32_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += std::int32_t{a[i]} * std::int32_t{b[i]};
    return s;
}

void dot_rows_scalar(const std::int8_t* q, const std::int8_t* rows, std::size_t count,
                     std::size_t stride, std::int32_t* out) {
    for (std::size_t r = 0; r < count; ++r) out[r] = dot_ternary_scalar(q, rows + r * stride, stride);
}

void gf3_axpy_scalar(std::uint8_t* y, const std::uint8_t* x, std::uint8_t c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<std::uint8_t>((y[i] + c * x[i]) % 3);
}

std::size_t count_nonzero_scalar(const std::uint8_t* v, std::size_t n) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += v[i] != 0;
    return s;
}

std::size_t and_into_scalar(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                            std::size_t words) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < words; ++i) {
        out[i] = a[i] & b[i];
        s += static_cast<std::size_t>(std::popcount(out[i]));
    }
    return s;
}

std::size_t and_count_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < words; ++i) s += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return s;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{dot_ternary_scalar, dot_rows_scalar,  gf3_axpy_scalar,
                                   count_nonzero_scalar, and_into_scalar, and_count_scalar};
    return table;
}

}  // namespace muwm::simd
