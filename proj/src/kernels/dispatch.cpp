#include <cstdlib>
#include <stdexcept>
#include <string>

#include "bji/kernels/scatter_max.hpp"

namespace bji::kernels {

namespace {

bool cpu_has(Isa isa) noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
      return __builtin_cpu_supports("avx2");
    case Isa::avx512:
      return __builtin_cpu_supports("avx512f");
  }
  return false;
#else
  return isa == Isa::scalar;
#endif
}

bool compiled_in(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#ifdef BJI_HAVE_AVX2
      return true;
#else
      return false;
#endif
    case Isa::avx512:
#ifdef BJI_HAVE_AVX512
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa widest_supported() noexcept {
  if (isa_supported(Isa::avx512)) return Isa::avx512;
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  return Isa::scalar;
}

Isa initial_isa() noexcept {
  if (const char* env = std::getenv("BJI_ISA")) {
    if (auto isa = parse_isa(env); isa && isa_supported(*isa)) return *isa;
  }
  return widest_supported();
}

struct Active {
  Isa isa = initial_isa();
  ScatterMaxFn fn = kernel_for(isa);
};

Active& active() {
  static Active state;
  return state;
}

}  // namespace

bool isa_supported(Isa isa) noexcept { return compiled_in(isa) && cpu_has(isa); }

ScatterMaxFn kernel_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scatter_max_scalar;
    case Isa::avx2:
      return &scatter_max_avx2;
    case Isa::avx512:
      return &scatter_max_avx512;
  }
  return &scatter_max_scalar;
}

Isa active_isa() noexcept { return active().isa; }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("ISA not supported: " + std::string(isa_name(isa)));
  active().isa = isa;
  active().fn = kernel_for(isa);
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::avx512:
      return "avx512";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "avx512") return Isa::avx512;
  return std::nullopt;
}

void scatter_max(const StridedRange& r, std::uint32_t* table) { active().fn(r, table); }

}  // namespace bji::kernels
