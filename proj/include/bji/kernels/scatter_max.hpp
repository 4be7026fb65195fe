#pragma once

// Strided scatter-max: the inner loop shared by the run-based indexers.
//
// For j in [0, count), with idx = first + j * stride:
//
//   table[pos[idx] - pos_base] = max(table[pos[idx] - pos_base], cnt[idx] - cnt_base)
//
// pos must be strictly increasing along the visited indices, so the table
// slots touched by one call are pairwise distinct. The scalar kernel is the
// reference; the vector kernels must produce identical tables.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace bji::kernels {

enum class Isa { scalar, avx2, avx512 };

struct StridedRange {
  const std::uint32_t* pos = nullptr;
  const std::uint32_t* cnt = nullptr;
  std::size_t first = 0;
  std::size_t count = 0;
  std::size_t stride = 1;
  std::uint32_t pos_base = 0;
  std::uint32_t cnt_base = 0;
};

using ScatterMaxFn = void (*)(const StridedRange&, std::uint32_t* table);

void scatter_max_scalar(const StridedRange& r, std::uint32_t* table);
void scatter_max_avx2(const StridedRange& r, std::uint32_t* table);
void scatter_max_avx512(const StridedRange& r, std::uint32_t* table);

/// Scalar only: also records `r.pos_base` as the witness of every slot the
/// call strictly improves.
void scatter_max_witness(const StridedRange& r, std::uint32_t* table, std::uint32_t* witness);

/// Whether the kernel was compiled in and the running CPU can execute it.
bool isa_supported(Isa isa) noexcept;
ScatterMaxFn kernel_for(Isa isa);

/// The kernel used by the indexers. Defaults to the widest supported ISA;
/// the BJI_ISA environment variable (scalar|avx2|avx512) overrides it.
Isa active_isa() noexcept;
/// Throws std::invalid_argument if the ISA is not supported here.
void set_active_isa(Isa isa);

std::string_view isa_name(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

void scatter_max(const StridedRange& r, std::uint32_t* table);

}  // namespace bji::kernels
