#include "bji/index_tables.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bji {

IndexTables::IndexTables(std::size_t length, bool with_witnesses)
    : n(length), max1(length + 1, 0), max0(length + 1, 0) {
  if (with_witnesses) {
    witness1.emplace(length + 1, kNoWitness);
    witness0.emplace(length + 1, kNoWitness);
  }
}

bool same_tables(const IndexTables& a, const IndexTables& b) noexcept {
  return a.n == b.n && a.max1 == b.max1 && a.max0 == b.max0;
}

std::optional<std::string> check_invariants(const IndexTables& t) {
  const std::size_t n = t.n;
  if (t.max1.size() != n + 1 || t.max0.size() != n + 1) return "table length differs from n + 1";
  if (t.max1[0] != 0 || t.max0[0] != 0) return "entry for length 0 must be 0";
  for (std::size_t l = 1; l <= n; ++l) {
    const std::string at = " at length " + std::to_string(l);
    if (t.max1[l] > l || t.max0[l] > l) return "entry exceeds factor length" + at;
    if (t.max1[l] < t.max1[l - 1] || t.max0[l] < t.max0[l - 1]) return "table decreases" + at;
    if (t.max1[l] > t.max1[l - 1] + 1 || t.max0[l] > t.max0[l - 1] + 1) return "table grows by more than one" + at;
    if (std::size_t{t.max1[l]} + t.max0[l] < l) return "max ones plus max zeros below length" + at;
  }
  if (std::size_t{t.max1[n]} + t.max0[n] != n) return "totals at full length do not add up to n";
  return std::nullopt;
}

void windowize(std::span<std::uint32_t> table) {
  if (table.size() < 2) return;
  const std::size_t n = table.size() - 1;
  for (std::size_t i = n - 1; i >= 1; --i) {
    if (table[i + 1] > 0) table[i] = std::max(table[i], table[i + 1] - 1);
  }
  for (std::size_t i = 1; i <= n; ++i) table[i] = std::max(table[i], table[i - 1]);
}

std::uint32_t min1_of(const IndexTables& t, std::size_t l) {
  if (l > t.n) throw std::out_of_range("length " + std::to_string(l) + " exceeds n = " + std::to_string(t.n));
  return static_cast<std::uint32_t>(l - t.max0[l]);
}

std::uint32_t min0_of(const IndexTables& t, std::size_t l) {
  if (l > t.n) throw std::out_of_range("length " + std::to_string(l) + " exceeds n = " + std::to_string(t.n));
  return static_cast<std::uint32_t>(l - t.max1[l]);
}

bool query(const IndexTables& t, ParikhQuery q) noexcept {
  const std::uint64_t l = q.length();
  if (l == 0) return true;
  if (l > t.n) return false;
  return q.ones <= t.max1[l] && q.zeros <= t.max0[l];
}

std::optional<Witness> query_witness(const IndexTables& t, ParikhQuery q,
                                     std::span<const std::uint32_t> ones_prefix) {
  if (!query(t, q)) return std::nullopt;
  const std::size_t l = static_cast<std::size_t>(q.length());
  if (l == 0) return Witness{0, 0};
  if (!t.has_witnesses()) throw std::invalid_argument("tables were built without witnesses");
  if (ones_prefix.size() != t.n + 1) throw std::invalid_argument("prefix sums do not match the indexed length");

  auto ones_at = [&](std::size_t p) { return ones_prefix[p + l] - ones_prefix[p]; };
  // The max-ones window holds >= q.ones ones and the max-zeros window holds
  // <= q.ones ones; walking between them changes the count by at most one
  // per step, so some window on the way holds exactly q.ones.
  std::size_t p = (*t.witness1)[l];
  const std::size_t target = (*t.witness0)[l];
  while (true) {
    if (ones_at(p) == q.ones) return Witness{p, l};
    if (p == target) break;
    p = p < target ? p + 1 : p - 1;
  }
  throw std::logic_error("witness walk missed a count inside the interval");
}

std::optional<Witness> query_witness(const IndexTables& t, ParikhQuery q, const BinaryString& w) {
  const auto sums = ones_prefix_sums(w);
  return query_witness(t, q, sums);
}

std::vector<std::uint32_t> BitTable::prefix_sums() const {
  std::vector<std::uint32_t> table(bits.size() + 1, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) table[i + 1] = table[i] + bits[i];
  return table;
}

BinaryString BitTable::as_word() const { return BinaryString(bits); }

BitTable to_bit_table(std::span<const std::uint32_t> table) {
  BitTable out;
  if (table.empty()) return out;
  out.bits.resize(table.size() - 1);
  for (std::size_t i = 0; i + 1 < table.size(); ++i) out.bits[i] = table[i + 1] > table[i] ? 1 : 0;
  return out;
}

namespace {

// Derives missing witnesses for one table. count(p, l) gives the number of
// the tracked digit in the window [p, p + l).
template <typename Count>
void fill_witnesses(std::span<const std::uint32_t> table, std::vector<std::uint32_t>& wit, std::size_t n,
                    Count count) {
  wit[0] = 0;
  auto missing = [&] {
    return static_cast<std::size_t>(std::count(wit.begin(), wit.end(), kNoWitness));
  };
  for (std::size_t left = missing(); left > 0;) {
    // Trim one end off the next-longer witness.
    for (std::size_t l = n - 1; l >= 1; --l) {
      if (wit[l] != kNoWitness || wit[l + 1] == kNoWitness) continue;
      const std::size_t p = wit[l + 1];
      if (count(p, l) == table[l]) {
        wit[l] = static_cast<std::uint32_t>(p);
      } else if (count(p + 1, l) == table[l]) {
        wit[l] = static_cast<std::uint32_t>(p + 1);
      }
    }
    // Extend the next-shorter witness by one digit.
    for (std::size_t l = 1; l <= n; ++l) {
      if (wit[l] != kNoWitness || wit[l - 1] == kNoWitness) continue;
      const std::size_t p = wit[l - 1];
      if (p + l <= n && count(p, l) == table[l]) {
        wit[l] = static_cast<std::uint32_t>(p);
      } else if (p >= 1 && count(p - 1, l) == table[l]) {
        wit[l] = static_cast<std::uint32_t>(p - 1);
      }
    }
    const std::size_t now = missing();
    if (now == left) throw std::logic_error("could not derive witnesses for every length");
    left = now;
  }
  for (std::size_t l = 0; l <= n; ++l) {
    if (wit[l] + l > n || count(wit[l], l) != table[l]) {
      throw std::logic_error("witness for length " + std::to_string(l) + " does not attain the table value");
    }
  }
}

}  // namespace

void finalize_tables(IndexTables& t, std::span<const std::uint32_t> ones_prefix) {
  const std::vector<std::uint32_t> direct1 = t.max1;
  const std::vector<std::uint32_t> direct0 = t.max0;
  windowize(t.max1);
  windowize(t.max0);
  if (!t.has_witnesses()) return;
  if (ones_prefix.size() != t.n + 1) throw std::invalid_argument("prefix sums do not match the indexed length");

  auto& w1 = *t.witness1;
  auto& w0 = *t.witness0;
  for (std::size_t l = 0; l <= t.n; ++l) {
    if (direct1[l] != t.max1[l]) w1[l] = kNoWitness;
    if (direct0[l] != t.max0[l]) w0[l] = kNoWitness;
  }
  auto ones = [&](std::size_t p, std::size_t l) { return ones_prefix[p + l] - ones_prefix[p]; };
  auto zeros = [&](std::size_t p, std::size_t l) { return static_cast<std::uint32_t>(l) - ones(p, l); };
  fill_witnesses(t.max1, w1, t.n, ones);
  fill_witnesses(t.max0, w0, t.n, zeros);
}

}  // namespace bji
