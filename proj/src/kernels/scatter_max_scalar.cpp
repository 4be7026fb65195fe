#include <algorithm>

#include "bji/kernels/scatter_max.hpp"

namespace bji::kernels {

void scatter_max_scalar(const StridedRange& r, std::uint32_t* table) {
  const std::uint32_t* pos = r.pos + r.first;
  const std::uint32_t* cnt = r.cnt + r.first;
  const std::size_t end = r.count * r.stride;
  for (std::size_t i = 0; i < end; i += r.stride) {
    std::uint32_t& slot = table[pos[i] - r.pos_base];
    slot = std::max(slot, cnt[i] - r.cnt_base);
  }
}

void scatter_max_witness(const StridedRange& r, std::uint32_t* table, std::uint32_t* witness) {
  const std::uint32_t* pos = r.pos + r.first;
  const std::uint32_t* cnt = r.cnt + r.first;
  const std::size_t end = r.count * r.stride;
  for (std::size_t i = 0; i < end; i += r.stride) {
    const std::uint32_t slot = pos[i] - r.pos_base;
    const std::uint32_t value = cnt[i] - r.cnt_base;
    if (value > table[slot]) {
      table[slot] = value;
      witness[slot] = r.pos_base;
    }
  }
}

}  // namespace bji::kernels
