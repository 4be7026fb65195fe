#include "bji/kernels/scatter_max.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

namespace bji::kernels {

void scatter_max_avx2(const StridedRange& r, std::uint32_t* table) {
  const std::uint32_t* pos = r.pos + r.first;
  const std::uint32_t* cnt = r.cnt + r.first;
  const auto stride = static_cast<int>(r.stride);
  const __m256i lanes = _mm256_mullo_epi32(_mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7), _mm256_set1_epi32(stride));
  const __m256i pos_base = _mm256_set1_epi32(static_cast<int>(r.pos_base));
  const __m256i cnt_base = _mm256_set1_epi32(static_cast<int>(r.cnt_base));
  const auto* table_i = reinterpret_cast<const int*>(table);

  std::size_t j = 0;
  alignas(32) std::uint32_t slots[8];
  alignas(32) std::uint32_t values[8];
  for (; j + 8 <= r.count; j += 8) {
    const std::size_t off = j * r.stride;
    __m256i p;
    __m256i c;
    if (stride == 1) {
      p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pos + off));
      c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cnt + off));
    } else {
      p = _mm256_i32gather_epi32(reinterpret_cast<const int*>(pos + off), lanes, 4);
      c = _mm256_i32gather_epi32(reinterpret_cast<const int*>(cnt + off), lanes, 4);
    }
    const __m256i slot = _mm256_sub_epi32(p, pos_base);
    const __m256i value = _mm256_sub_epi32(c, cnt_base);
    const __m256i current = _mm256_i32gather_epi32(table_i, slot, 4);
    const __m256i best = _mm256_max_epu32(current, value);
    // No scatter in AVX2: write back only the lanes that improved.
    auto changed = static_cast<unsigned>(
        _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_xor_si256(_mm256_cmpeq_epi32(best, current), _mm256_set1_epi32(-1)))));
    if (changed == 0) continue;
    _mm256_store_si256(reinterpret_cast<__m256i*>(slots), slot);
    _mm256_store_si256(reinterpret_cast<__m256i*>(values), best);
    while (changed != 0) {
      const int lane = __builtin_ctz(changed);
      table[slots[lane]] = values[lane];
      changed &= changed - 1;
    }
  }
  StridedRange tail = r;
  tail.first = r.first + j * r.stride;
  tail.count = r.count - j;
  scatter_max_scalar(tail, table);
}

}  // namespace bji::kernels

#else

namespace bji::kernels {
void scatter_max_avx2(const StridedRange& r, std::uint32_t* table) { scatter_max_scalar(r, table); }
}  // namespace bji::kernels

#endif
