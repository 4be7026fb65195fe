#include "bji/kernels/scatter_max.hpp"

#if defined(__x86_64__) && defined(__AVX512F__)
#include <immintrin.h>

namespace bji::kernels {

void scatter_max_avx512(const StridedRange& r, std::uint32_t* table) {
  const std::uint32_t* pos = r.pos + r.first;
  const std::uint32_t* cnt = r.cnt + r.first;
  const auto stride = static_cast<int>(r.stride);
  const __m512i lanes = _mm512_mullo_epi32(
      _mm512_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15), _mm512_set1_epi32(stride));
  const __m512i pos_base = _mm512_set1_epi32(static_cast<int>(r.pos_base));
  const __m512i cnt_base = _mm512_set1_epi32(static_cast<int>(r.cnt_base));

  for (std::size_t j = 0; j < r.count; j += 16) {
    const std::size_t left = r.count - j;
    const __mmask16 mask = left >= 16 ? __mmask16{0xFFFF} : static_cast<__mmask16>((1U << left) - 1U);
    const std::size_t off = j * r.stride;
    const __m512i zero = _mm512_setzero_si512();
    __m512i p;
    __m512i c;
    if (stride == 1) {
      p = _mm512_maskz_loadu_epi32(mask, pos + off);
      c = _mm512_maskz_loadu_epi32(mask, cnt + off);
    } else {
      p = _mm512_mask_i32gather_epi32(zero, mask, lanes, pos + off, 4);
      c = _mm512_mask_i32gather_epi32(zero, mask, lanes, cnt + off, 4);
    }
    const __m512i slot = _mm512_sub_epi32(p, pos_base);
    const __m512i value = _mm512_sub_epi32(c, cnt_base);
    const __m512i current = _mm512_mask_i32gather_epi32(zero, mask, slot, table, 4);
    // Slots are distinct within a vector, so the scatter has no conflicts.
    const __mmask16 improved = _mm512_mask_cmpgt_epu32_mask(mask, value, current);
    if (improved != 0) _mm512_mask_i32scatter_epi32(table, improved, slot, value, 4);
  }
}

}  // namespace bji::kernels

#else

namespace bji::kernels {
void scatter_max_avx512(const StridedRange& r, std::uint32_t* table) { scatter_max_scalar(r, table); }
}  // namespace bji::kernels

#endif
