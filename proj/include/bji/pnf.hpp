#pragma once

// Prefix normal forms.

#include "bji/binary_string.hpp"
#include "bji/index_tables.hpp"

namespace bji {

/// The 1-prefix normal form: the bit-encoded max1 table read as a word.
BinaryString pnf1(const BinaryString& w);
BinaryString pnf1(const IndexTables& t);

/// True iff every prefix of w has the maximum number of ones for its length.
bool is_prefix_normal(const BinaryString& w);

}  // namespace bji
