#pragma once

// Builders for the max-ones / max-zeros tables.
//
//   build_naive    sliding window per length, O(n^2); the reference oracle
//   build_jbm2017  every factor from the start of one same-digit run to the
//                  end of a later one, O(n + rho^2)
//   build_sftree   each distinct run-aligned factor once, read off a suffix
//                  tree of the run-length sequence

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "bji/binary_string.hpp"
#include "bji/index_tables.hpp"
#include "bji/suffix_tree.hpp"

namespace bji {

enum class Engine { naive, jbm2017, sftree };

std::string_view engine_name(Engine e) noexcept;
/// Accepts "naive", "jbm" / "jbm2017" and "sftree".
std::optional<Engine> parse_engine(std::string_view name) noexcept;

struct BuildOptions {
  bool witnesses = false;
};

/// Deterministic work counters. `contributions` counts table updates
/// attempted before windowizing (windows scanned, for the naive engine).
struct BuildStats {
  std::uint64_t contributions = 0;
  std::uint64_t nodes_visited = 0;
  std::size_t one_runs = 0;
  std::size_t zero_runs = 0;
};

struct BuildResult {
  IndexTables tables;
  BuildStats stats;
};

BuildResult build_naive(const BinaryString& w, BuildOptions opts = {});
BuildResult build_jbm2017(const BinaryString& w, BuildOptions opts = {});
BuildResult build_sftree(const BinaryString& w, BuildOptions opts = {});
BuildResult build(Engine e, const BinaryString& w, BuildOptions opts = {});

/// Indexes the odd-run-count prefixes of one visited factor that are longer
/// than its parent path, once for each starting digit the factor occurs
/// with. Factors starting with a 1-run update max1 with their ones; those
/// starting with a 0-run update max0 with their zeros. Records witnesses if
/// the tables carry witness arrays. Returns the number of updates.
std::uint64_t index_factor(const FactorVisit& v, const RunSequence& r, IndexTables& t);

/// Calls f(start_run, run_count) for every update index_factor performs.
template <typename F>
void for_each_contribution(const FactorVisit& v, F&& f) {
  const std::uint32_t depth = v.depth();
  const std::uint32_t first = v.parent_depth % 2 == 0 ? v.parent_depth + 1 : v.parent_depth + 2;
  for (const std::uint32_t start : v.start_by_parity) {
    if (start == FactorVisit::kNone) continue;
    for (std::uint32_t k = first; k <= depth; k += 2) f(start, k);
  }
}

}  // namespace bji
