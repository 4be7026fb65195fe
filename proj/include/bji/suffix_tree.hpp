#pragma once

// Ukkonen suffix tree over an integer alphabet (run lengths).

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bji/binary_string.hpp"

namespace bji {

/// One non-root node reached by a pre-order walk, with the sentinel hidden.
///
/// The node's root path is the run slice [run_start, run_end) and has
/// run_end - run_start = depth runs; the parent path has parent_depth runs.
/// start_by_parity[p] is the start of an occurrence of the path whose run
/// index has parity p, or kNone when every occurrence starts at the other
/// parity. Since runs alternate digits, the two entries are the occurrences
/// that begin with each digit.
struct FactorVisit {
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t node = 0;
  std::uint32_t run_start = 0;
  std::uint32_t run_end = 0;
  std::uint32_t parent_depth = 0;
  std::uint32_t start_run_index = 0;
  std::array<std::uint32_t, 2> start_by_parity{kNone, kNone};

  std::uint32_t depth() const noexcept { return run_end - run_start; }
};

class SuffixTree {
 public:
  static constexpr std::uint32_t kNone = FactorVisit::kNone;
  /// Terminal symbol; input symbols must be positive.
  static constexpr std::uint32_t kSentinel = 0;

  struct Node {
    std::uint32_t edge_start = 0;  // incoming edge label is text[edge_start, edge_end)
    std::uint32_t edge_end = 0;
    std::uint32_t depth = 0;  // symbols from the root, sentinel included
    std::uint32_t parent = kNone;
    std::uint32_t first_child = kNone;
    std::uint32_t next_sibling = kNone;
    std::uint32_t suffix_start = kNone;          // leaves only
    std::uint32_t representative_start = kNone;  // start of some leaf below
    std::array<std::uint32_t, 2> start_by_parity{kNone, kNone};
  };

  /// Builds the tree of symbols + sentinel in time linear in symbols.size()
  /// for a bounded number of distinct children per node. Throws
  /// std::invalid_argument on a zero symbol.
  explicit SuffixTree(std::span<const std::uint32_t> symbols);

  std::uint32_t root() const noexcept { return 0; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t leaf_count() const noexcept;
  const Node& node(std::uint32_t id) const { return nodes_.at(id); }
  bool is_leaf(std::uint32_t id) const { return nodes_.at(id).first_child == kNone && id != root(); }

  /// Number of input symbols (sentinel excluded).
  std::size_t symbol_count() const noexcept { return text_.size() - 1; }
  /// Symbols followed by the sentinel.
  std::span<const std::uint32_t> text() const noexcept { return text_; }

  std::uint32_t child(std::uint32_t id, std::uint32_t symbol) const noexcept;

  /// True iff f occurs as a factor of the input symbols.
  bool contains(std::span<const std::uint32_t> f) const;

  /// Calls visit(const FactorVisit&) for every non-root node in pre-order,
  /// skipping sentinel-only edges and trimming the sentinel from leaf paths.
  template <typename Visitor>
  void preorder(Visitor&& visit) const;

  std::vector<FactorVisit> preorder_factors() const;

  /// One line per node: "<id> parent=<id> span=[s,e) depth=<d>".
  std::string dump() const;

 private:
  std::uint32_t visible_depth(const Node& n) const noexcept {
    return n.first_child == kNone ? n.depth - 1 : n.depth;
  }

  std::vector<std::uint32_t> text_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> preorder_;  // node ids, root first
};

SuffixTree build_tree(const RunSequence& r);

template <typename Visitor>
void SuffixTree::preorder(Visitor&& visit) const {
  for (std::size_t i = 1; i < preorder_.size(); ++i) {
    const std::uint32_t id = preorder_[i];
    const Node& n = nodes_[id];
    const std::uint32_t depth = visible_depth(n);
    const std::uint32_t parent_depth = nodes_[n.parent].depth;
    if (depth == parent_depth) continue;  // edge holds only the sentinel
    FactorVisit v;
    v.node = id;
    v.run_start = n.representative_start;
    v.run_end = n.representative_start + depth;
    v.parent_depth = parent_depth;
    v.start_run_index = n.representative_start;
    v.start_by_parity = n.start_by_parity;
    visit(static_cast<const FactorVisit&>(v));
  }
}

}  // namespace bji
