#include "bji/pnf.hpp"

#include "bji/indexers.hpp"

namespace bji {

BinaryString pnf1(const IndexTables& t) { return to_bit_table(t).as_word(); }

BinaryString pnf1(const BinaryString& w) { return pnf1(build_sftree(w).tables); }

bool is_prefix_normal(const BinaryString& w) { return pnf1(w) == w; }

}  // namespace bji
