// AVX2 kernel, compiled with -mavx2 in its own translation unit so the rest
// of the library stays runnable on any x86-64.

#include "rewire/intersect.hpp"

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)

#include <immintrin.h>

#include <bit>

namespace rewire::simd {

bool avx2_available() {
#if defined(_MSC_VER)
    return false;
#else
    return __builtin_cpu_supports("avx2");
#endif
}

// Block merge: compare an 8-lane block of a against all rotations of an
// 8-lane block of b, then advance whichever block has the smaller maximum.
// Elements are unique within each array, so every matched lane of va is
// exactly one shared value.
std::size_t intersect_count_avx2(const std::uint32_t* a, std::size_t na,
                                 const std::uint32_t* b, std::size_t nb) {
    std::size_t i = 0, j = 0;
    std::size_t count = 0;
    if (na >= 8 && nb >= 8) {
        const __m256i rotate1 = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0);
        while (i + 8 <= na && j + 8 <= nb) {
            const __m256i va =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
            __m256i vb =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
            __m256i match = _mm256_cmpeq_epi32(va, vb);
            for (int r = 1; r < 8; ++r) {
                vb = _mm256_permutevar8x32_epi32(vb, rotate1);
                match = _mm256_or_si256(match, _mm256_cmpeq_epi32(va, vb));
            }
            const int mask =
                _mm256_movemask_ps(_mm256_castsi256_ps(match));
            count += static_cast<std::size_t>(std::popcount(
                static_cast<unsigned>(mask)));
            const std::uint32_t amax = a[i + 7];
            const std::uint32_t bmax = b[j + 7];
            if (amax <= bmax)
                i += 8;
            if (bmax <= amax)
                j += 8;
        }
    }
    return count + intersect_count_scalar(a + i, na - i, b + j, nb - j);
}

} // namespace rewire::simd

#endif
