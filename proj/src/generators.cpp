#include "bji/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace bji {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

BinaryString gen_random(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> digits(n);
  for (std::size_t i = 0; i < n; i += 64) {
    std::uint64_t draw = rng();
    const std::size_t end = std::min(n, i + 64);
    for (std::size_t k = i; k < end; ++k, draw >>= 1) digits[k] = static_cast<std::uint8_t>(draw & 1U);
  }
  return BinaryString(std::move(digits));
}

BinaryString gen_interspersed(std::size_t n) {
  std::vector<std::uint8_t> digits(n);
  for (std::size_t i = 0; i < n; ++i) digits[i] = static_cast<std::uint8_t>(i & 1U);
  return BinaryString(std::move(digits));
}

BinaryString gen_fibonacci(std::size_t n) {
  std::vector<std::uint8_t> prev{0};
  std::vector<std::uint8_t> cur{0, 1};
  if (n <= 1) return BinaryString(std::vector<std::uint8_t>(prev.begin(), prev.begin() + n));
  while (cur.size() < n) {
    std::vector<std::uint8_t> next = cur;
    next.insert(next.end(), prev.begin(), prev.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.resize(n);
  return BinaryString(std::move(cur));
}

BinaryString gen_sorted_runs(std::size_t n) {
  std::vector<std::uint8_t> digits;
  digits.reserve(n);
  for (std::size_t len = 1; digits.size() < n; ++len) {
    for (const std::uint8_t d : {std::uint8_t{1}, std::uint8_t{0}}) {
      const std::size_t take = std::min(len, n - digits.size());
      digits.insert(digits.end(), take, d);
    }
  }
  return BinaryString(std::move(digits));
}

std::string_view generator_name(Generator g) noexcept {
  switch (g) {
    case Generator::random:
      return "random";
    case Generator::interspersed:
      return "interspersed";
    case Generator::fibonacci:
      return "fibonacci";
    case Generator::sorted_runs:
      return "sorted_runs";
  }
  return "unknown";
}

std::optional<Generator> parse_generator(std::string_view name) noexcept {
  for (const Generator g : {Generator::random, Generator::interspersed, Generator::fibonacci, Generator::sorted_runs}) {
    if (name == generator_name(g)) return g;
  }
  return std::nullopt;
}

BinaryString generate(Generator g, std::size_t n, std::uint64_t seed) {
  switch (g) {
    case Generator::random:
      return gen_random(n, seed);
    case Generator::interspersed:
      return gen_interspersed(n);
    case Generator::fibonacci:
      return gen_fibonacci(n);
    case Generator::sorted_runs:
      return gen_sorted_runs(n);
  }
  throw std::invalid_argument("unknown generator");
}

RunStats run_stats(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("run_stats needs n >= 1");
  if (trials == 0) throw std::invalid_argument("run_stats needs at least one trial");
  double one_runs = 0.0;
  double total_runs = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const BinaryString w = gen_random(n, trial_seed(seed, t));
    std::size_t ones = w[0];
    std::size_t total = 1;
    for (std::size_t i = 1; i < n; ++i) {
      if (w[i] != w[i - 1]) {
        ++total;
        ones += w[i];
      }
    }
    one_runs += static_cast<double>(ones);
    total_runs += static_cast<double>(total);
  }
  return {one_runs / static_cast<double>(trials), total_runs / static_cast<double>(trials)};
}

}  // namespace bji
