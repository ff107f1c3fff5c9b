// Compiled with -mavx2 -mpopcnt; only reached after a CPUID check.

#include "muwm/simd.hpp"

#include <immintrin.h>

#include <bit>

namespace muwm::simd {
namespace {

inline std::int32_t hsum_epi32(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi32(lo, hi);
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
    return _mm_cvtsi128_si32(s);
}

// For b in {-1,0,1}, sign_epi8(a, b) is exactly a*b. The byte products are
// widened by maddubs against unsigned ones, then to int32 by madd.
inline __m256i dot_chunk(__m256i a, __m256i b, __m256i acc) {
    const __m256i ones8 = _mm256_set1_epi8(1);
    const __m256i ones16 = _mm256_set1_epi16(1);
    __m256i prod = _mm256_sign_epi8(a, b);
    __m256i pairs = _mm256_maddubs_epi16(ones8, prod);
    return _mm256_add_epi32(acc, _mm256_madd_epi16(pairs, ones16));
}

std::int32_t dot_ternary_avx2(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t i = 0; i < n; i += kLane) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = dot_chunk(va, vb, acc);
    }
    return hsum_epi32(acc);
}

void dot_rows_avx2(const std::int8_t* q, const std::int8_t* rows, std::size_t count,
                   std::size_t stride, std::int32_t* out) {
    if (stride == kLane) {
        const __m256i vq = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(q));
        for (std::size_t r = 0; r < count; ++r) {
            __m256i vr = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + r * kLane));
            out[r] = hsum_epi32(dot_chunk(vq, vr, _mm256_setzero_si256()));
        }
        return;
    }
    for (std::size_t r = 0; r < count; ++r) out[r] = dot_ternary_avx2(q, rows + r * stride, stride);
}

// x + c*x' over {0,1,2}: with c = 2 the sum is y + 2x <= 6, two conditional
// subtractions of 3 via unsigned min(v, v-3).
void gf3_axpy_avx2(std::uint8_t* y, const std::uint8_t* x, std::uint8_t c, std::size_t n) {
    const __m256i three = _mm256_set1_epi8(3);
    for (std::size_t i = 0; i < n; i += kLane) {
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        if (c == 2) vx = _mm256_add_epi8(vx, vx);
        __m256i s = _mm256_add_epi8(vy, vx);
        s = _mm256_min_epu8(s, _mm256_sub_epi8(s, three));
        s = _mm256_min_epu8(s, _mm256_sub_epi8(s, three));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), s);
    }
}

std::size_t count_nonzero_avx2(const std::uint8_t* v, std::size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < n; i += kLane) {
        __m256i vv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(vv, zero)));
        zeros += static_cast<std::size_t>(std::popcount(mask));
    }
    return n - zeros;
}

inline std::size_t popcount256(__m256i v) {
    return static_cast<std::size_t>(
        _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 0))) +
        _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 1))) +
        _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 2))) +
        _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 3))));
}

std::size_t and_into_avx2(std::uint64_t* out, const std::uint64_t* a, const std::uint64_t* b,
                          std::size_t words) {
    std::size_t s = 0;
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i r = _mm256_and_si256(va, vb);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
        s += popcount256(r);
    }
    for (; i < words; ++i) {
        out[i] = a[i] & b[i];
        s += static_cast<std::size_t>(std::popcount(out[i]));
    }
    return s;
}

std::size_t and_count_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t s = 0;
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        s += popcount256(_mm256_and_si256(va, vb));
    }
    for (; i < words; ++i) s += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return s;
}

}  // namespace

const KernelTable& avx2_kernels() {
    static const KernelTable table{dot_ternary_avx2,    dot_rows_avx2, gf3_axpy_avx2,
                                   count_nonzero_avx2, and_into_avx2, and_count_avx2};
    return table;
}

}  // namespace muwm::simd
