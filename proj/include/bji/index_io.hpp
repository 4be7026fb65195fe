#pragma once

// Text persistence for index tables.
//
//   word form:  "BJI word n=<n>" / max1[1..n] space-separated / max0[1..n]
//   bit form:   "BJI bits n=<n> ones=<k>" / max1 bits as '0'/'1' / max0 bits
//
// Witnesses are not persisted. Loading revalidates every table invariant.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bji/index_tables.hpp"

namespace bji {

enum class IndexFormat { word, bits };

enum class IndexErrorKind {
  malformed_header,
  malformed_entry,
  length_mismatch,
  invariant_violation,
};

class IndexParseError : public std::runtime_error {
 public:
  IndexParseError(IndexErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  IndexErrorKind kind() const noexcept { return kind_; }

 private:
  IndexErrorKind kind_;
};

void save_index(const IndexTables& t, std::ostream& out, IndexFormat format);
std::string save_index(const IndexTables& t, IndexFormat format);

/// Detects the format from the header line.
IndexTables load_index(std::istream& in);
IndexTables load_index(std::string_view text);

std::string_view format_name(IndexFormat f) noexcept;

}  // namespace bji
