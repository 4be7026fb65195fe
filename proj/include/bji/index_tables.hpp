#pragma once

// Max-ones / max-zeros index tables and the constant-time Parikh query.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bji/binary_string.hpp"

namespace bji {

inline constexpr std::uint32_t kNoWitness = std::numeric_limits<std::uint32_t>::max();

/// max1[l] / max0[l] hold the largest number of ones / zeros found in any
/// factor of length l, for l in [0, n]. Witness arrays, when present, hold
/// the start of one factor attaining that maximum.
///
/// Minimum tables are never stored: min1[l] = l - max0[l] and
/// min0[l] = l - max1[l].
struct IndexTables {
  std::size_t n = 0;
  std::vector<std::uint32_t> max1{0};
  std::vector<std::uint32_t> max0{0};
  std::optional<std::vector<std::uint32_t>> witness1;
  std::optional<std::vector<std::uint32_t>> witness0;

  IndexTables() = default;
  /// Zero-filled tables for a source of length n.
  explicit IndexTables(std::size_t length, bool with_witnesses = false);

  bool has_witnesses() const noexcept { return witness1.has_value() && witness0.has_value(); }
};

/// Compares lengths and both max tables; witnesses are ignored.
bool same_tables(const IndexTables& a, const IndexTables& b) noexcept;

/// Returns a description of the first violated table invariant, if any
/// (bounds, stepwise growth, totals at l = n, coverage).
std::optional<std::string> check_invariants(const IndexTables& t);

/// Completes a sparsely filled max table using the stepwise bounds:
/// a right-to-left pass applies table[i] >= table[i+1] - 1, then a
/// left-to-right pass applies table[i] >= table[i-1].
void windowize(std::span<std::uint32_t> table);

/// Minimum number of ones over factors of length l. Throws std::out_of_range
/// when l > n.
std::uint32_t min1_of(const IndexTables& t, std::size_t l);
std::uint32_t min0_of(const IndexTables& t, std::size_t l);

struct ParikhQuery {
  std::uint32_t zeros = 0;
  std::uint32_t ones = 0;

  std::uint64_t length() const noexcept { return std::uint64_t{zeros} + ones; }
};

/// True iff the source has a factor with exactly q.zeros zeros and q.ones
/// ones. The empty vector (0,0) is always present.
bool query(const IndexTables& t, ParikhQuery q) noexcept;

struct Witness {
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Resolves a factor matching q, or nullopt when q is not a Parikh vector.
/// Needs tables built with witnesses and the prefix sums of the source.
/// Runs in time proportional to the distance between the max and min
/// witnesses for the queried length.
std::optional<Witness> query_witness(const IndexTables& t, ParikhQuery q,
                                     std::span<const std::uint32_t> ones_prefix);
std::optional<Witness> query_witness(const IndexTables& t, ParikhQuery q, const BinaryString& w);

/// Bit-encoded form of a stepwise table: bits[i] = 1 iff table[i+1] > table[i].
struct BitTable {
  std::vector<std::uint8_t> bits;

  /// Running sums with a leading zero; inverts to_bit_table.
  std::vector<std::uint32_t> prefix_sums() const;
  BinaryString as_word() const;
};

BitTable to_bit_table(std::span<const std::uint32_t> table);
inline BitTable to_bit_table(const IndexTables& t) { return to_bit_table(t.max1); }

/// Finishes a build: windowizes both tables and, when witness arrays are
/// present, drops witnesses that windowizing overtook and derives the
/// missing ones from neighbouring lengths. Every witness is checked against
/// the prefix sums; a failed check throws std::logic_error.
void finalize_tables(IndexTables& t, std::span<const std::uint32_t> ones_prefix);

}  // namespace bji
