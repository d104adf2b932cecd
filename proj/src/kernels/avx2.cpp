#include "dsf/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace dsf::kernels {

namespace {

__attribute__((target("avx2"))) inline __m256i popcount_epi32(__m256i x) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_nibble = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(x, low_nibble);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), low_nibble);
    __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    // Horizontal byte sum inside each 32-bit lane.
    __m256i s = _mm256_add_epi32(bytes, _mm256_srli_epi32(bytes, 8));
    s = _mm256_add_epi32(s, _mm256_srli_epi32(s, 16));
    return _mm256_and_si256(s, _mm256_set1_epi32(0xff));
}

__attribute__((target("avx2"))) void masked_popcounts_avx2(const RowBlock& rows, VertexMask mask,
                                                            ByteBlock& out) {
    const __m256i m = _mm256_set1_epi32(static_cast<int>(mask));
    const auto* src = reinterpret_cast<const __m256i*>(rows.data());
    __m256i a = popcount_epi32(_mm256_and_si256(_mm256_loadu_si256(src + 0), m));
    __m256i b = popcount_epi32(_mm256_and_si256(_mm256_loadu_si256(src + 1), m));
    __m256i c = popcount_epi32(_mm256_and_si256(_mm256_loadu_si256(src + 2), m));
    __m256i d = popcount_epi32(_mm256_and_si256(_mm256_loadu_si256(src + 3), m));
    __m256i ab = _mm256_packs_epi32(a, b);
    __m256i cd = _mm256_packs_epi32(c, d);
    __m256i abcd = _mm256_packus_epi16(ab, cd);
    // Undo the per-128-bit-lane interleave of the two pack steps.
    const __m256i order = _mm256_setr_epi32(0, 4, 1, 5, 2, 6, 3, 7);
    abcd = _mm256_permutevar8x32_epi32(abcd, order);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data()), abcd);
}

__attribute__((target("avx2"))) VertexMask window_mask_avx2(const ByteBlock& values, int n, int lo,
                                                            int hi) {
    lo = lo < -1 ? -1 : lo;
    hi = hi > 100 ? 100 : hi;
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data()));
    // Values are at most 32, so signed byte compares are exact.
    __m256i above = _mm256_cmpgt_epi8(v, _mm256_set1_epi8(static_cast<char>(lo - 1)));
    __m256i below = _mm256_cmpgt_epi8(_mm256_set1_epi8(static_cast<char>(hi + 1)), v);
    auto bits = static_cast<VertexMask>(_mm256_movemask_epi8(_mm256_and_si256(above, below)));
    return bits & Graph::full_mask(n);
}

}  // namespace

const Table* avx2() {
    static const bool supported = __builtin_cpu_supports("avx2");
    static const Table table{"avx2", &masked_popcounts_avx2, &window_mask_avx2};
    return supported ? &table : nullptr;
}

}  // namespace dsf::kernels

#else

namespace dsf::kernels {
const Table* avx2() {
    return nullptr;
}
}  // namespace dsf::kernels

#endif
