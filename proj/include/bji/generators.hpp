#pragma once

// Deterministic test and benchmark inputs, plus run-count statistics.
//
// Random strings come from std::mt19937_64 seeded with the given seed; each
// 64-bit draw supplies 64 digits, least significant bit first. Per-trial
// seeds are splitmix64(seed + 0x9E3779B97F4A7C15 * (trial + 1)).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "bji/binary_string.hpp"

namespace bji {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

BinaryString gen_random(std::size_t n, std::uint64_t seed);
/// "0101..." truncated to n digits.
BinaryString gen_interspersed(std::size_t n);
/// Prefix of the Fibonacci word s0 = 0, s1 = 01, s(k) = s(k-1) s(k-2).
BinaryString gen_fibonacci(std::size_t n);
/// 1 0 11 00 111 000 ... truncated to n digits.
BinaryString gen_sorted_runs(std::size_t n);

enum class Generator { random, interspersed, fibonacci, sorted_runs };

std::string_view generator_name(Generator g) noexcept;
std::optional<Generator> parse_generator(std::string_view name) noexcept;
/// The seed is ignored by the deterministic families.
BinaryString generate(Generator g, std::size_t n, std::uint64_t seed);

struct RunStats {
  double mean_one_runs = 0.0;
  double mean_total_runs = 0.0;
};

/// Means over `trials` uniformly random strings of length n. Trial t uses
/// gen_random(n, trial_seed(seed, t)). Throws std::invalid_argument when n
/// or trials is zero.
RunStats run_stats(std::size_t n, std::size_t trials, std::uint64_t seed);

}  // namespace bji
