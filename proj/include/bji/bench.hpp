#pragma once

// Benchmark harness: timed builds across engines and input families.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bji/generators.hpp"
#include "bji/indexers.hpp"

namespace bji {

struct BenchRecord {
  std::string algorithm;
  std::string generator;
  std::size_t n = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double elapsed_s = 0.0;
  std::uint64_t contributions = 0;
  std::size_t rho_ones = 0;

  /// Entries held by the two max tables.
  std::size_t peak_table_size() const noexcept { return 2 * (n + 1); }

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchConfig {
  std::vector<Engine> engines;
  std::vector<Generator> generators;
  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
};

/// Raised when two engines build different tables for the same input.
class EngineDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs every (generator, n, trial) input through every engine. Each build is
/// a single cold run timed with a monotonic clock. Records for an input are
/// released to `on_record` only after all engines agreed on its tables.
std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   const std::function<void(const BenchRecord&)>& on_record = {});

inline constexpr std::string_view kCsvHeader =
    "algorithm,generator,n,trial,seed,elapsed_s,contributions,rho_ones";

void write_csv_row(std::ostream& out, const BenchRecord& r);
/// Parses CSV produced by write_csv_row, header line included. Throws
/// std::runtime_error on malformed input.
std::vector<BenchRecord> parse_csv(std::string_view text);

struct BenchSummary {
  std::string algorithm;
  std::string generator;
  std::size_t n = 0;
  std::size_t runs = 0;
  double min_s = 0.0;
  double max_s = 0.0;
  double avg_s = 0.0;
  double avg_contributions = 0.0;
};

/// Min / max / average elapsed per (algorithm, generator, n), in first-seen order.
std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records);
void print_summary(std::ostream& out, const std::vector<BenchSummary>& rows);

}  // namespace bji
