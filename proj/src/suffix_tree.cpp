#include "bji/suffix_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace bji {

namespace {

constexpr std::uint32_t kOpen = SuffixTree::kNone;  // leaf edges grow with the phase

}  // namespace

SuffixTree::SuffixTree(std::span<const std::uint32_t> symbols) {
  if (symbols.size() >= kNone - 1) throw std::invalid_argument("sequence too long");
  text_.reserve(symbols.size() + 1);
  for (const std::uint32_t s : symbols) {
    if (s == kSentinel) throw std::invalid_argument("symbols must be positive");
    text_.push_back(s);
  }
  text_.push_back(kSentinel);
  const auto len = static_cast<std::uint32_t>(text_.size());

  nodes_.reserve(2 * text_.size() + 1);
  nodes_.emplace_back();
  nodes_[0].parent = kNone;
  // Suffix links live only for the duration of construction.
  std::vector<std::uint32_t> link;
  link.reserve(2 * text_.size() + 1);
  link.push_back(0);

  auto new_node = [&](std::uint32_t start, std::uint32_t end, std::uint32_t parent) {
    Node n;
    n.edge_start = start;
    n.edge_end = end;
    n.parent = parent;
    nodes_.push_back(n);
    link.push_back(0);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  };
  auto add_child = [&](std::uint32_t parent, std::uint32_t c) {
    nodes_[c].next_sibling = nodes_[parent].first_child;
    nodes_[parent].first_child = c;
  };
  auto edge_length = [&](std::uint32_t id, std::uint32_t phase) {
    const Node& n = nodes_[id];
    return (n.edge_end == kOpen ? phase + 1 : n.edge_end) - n.edge_start;
  };

  std::uint32_t active_node = 0;
  std::uint32_t active_edge = 0;
  std::uint32_t active_length = 0;
  std::uint32_t remainder = 0;

  for (std::uint32_t i = 0; i < len; ++i) {
    const std::uint32_t c = text_[i];
    ++remainder;
    std::uint32_t pending_link = kNone;
    auto set_link = [&](std::uint32_t target) {
      if (pending_link != kNone) link[pending_link] = target;
    };

    while (remainder > 0) {
      if (active_length == 0) active_edge = i;
      const std::uint32_t first = text_[active_edge];
      std::uint32_t prev = kNone;
      std::uint32_t next = nodes_[active_node].first_child;
      while (next != kNone && text_[nodes_[next].edge_start] != first) {
        prev = next;
        next = nodes_[next].next_sibling;
      }

      if (next == kNone) {
        add_child(active_node, new_node(i, kOpen, active_node));
        set_link(active_node);
        pending_link = kNone;
      } else {
        const std::uint32_t el = edge_length(next, i);
        if (active_length >= el) {
          active_edge += el;
          active_length -= el;
          active_node = next;
          continue;
        }
        if (text_[nodes_[next].edge_start + active_length] == c) {
          set_link(active_node);
          pending_link = kNone;
          ++active_length;
          break;
        }
        // Split the edge at the active point.
        const std::uint32_t split_at = nodes_[next].edge_start + active_length;
        const std::uint32_t mid = new_node(nodes_[next].edge_start, split_at, active_node);
        nodes_[mid].next_sibling = nodes_[next].next_sibling;
        if (prev == kNone) {
          nodes_[active_node].first_child = mid;
        } else {
          nodes_[prev].next_sibling = mid;
        }
        nodes_[next].edge_start = split_at;
        nodes_[next].parent = mid;
        nodes_[next].next_sibling = kNone;
        nodes_[mid].first_child = next;
        add_child(mid, new_node(i, kOpen, mid));
        set_link(mid);
        pending_link = mid;
      }

      --remainder;
      if (active_node == 0 && active_length > 0) {
        --active_length;
        active_edge = i - remainder + 1;
      } else if (active_node != 0) {
        active_node = link[active_node];
      }
    }
  }

  for (Node& n : nodes_) {
    if (n.edge_end == kOpen) n.edge_end = len;
  }

  // Pre-order with depths; leaves learn where their suffix starts.
  preorder_.reserve(nodes_.size());
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const std::uint32_t id = stack.back();
    stack.pop_back();
    preorder_.push_back(id);
    Node& n = nodes_[id];
    if (id != 0) n.depth = nodes_[n.parent].depth + (n.edge_end - n.edge_start);
    if (n.first_child == kNone && id != 0) n.suffix_start = len - n.depth;
    for (std::uint32_t ch = n.first_child; ch != kNone; ch = nodes_[ch].next_sibling) stack.push_back(ch);
  }

  // Representatives bottom-up. The sentinel-only suffix represents nothing.
  const std::uint32_t sentinel_start = len - 1;
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
    Node& n = nodes_[*it];
    if (n.first_child == kNone) {
      if (n.suffix_start != kNone && n.suffix_start != sentinel_start) {
        n.representative_start = n.suffix_start;
        n.start_by_parity[n.suffix_start & 1U] = n.suffix_start;
      }
      continue;
    }
    for (std::uint32_t ch = n.first_child; ch != kNone; ch = nodes_[ch].next_sibling) {
      const Node& child = nodes_[ch];
      if (n.representative_start == kNone) n.representative_start = child.representative_start;
      for (std::size_t p = 0; p < 2; ++p) {
        if (n.start_by_parity[p] == kNone) n.start_by_parity[p] = child.start_by_parity[p];
      }
    }
  }
}

std::size_t SuffixTree::leaf_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(nodes_.begin() + 1, nodes_.end(),
                                                [](const Node& n) { return n.first_child == kNone; }));
}

std::uint32_t SuffixTree::child(std::uint32_t id, std::uint32_t symbol) const noexcept {
  for (std::uint32_t ch = nodes_[id].first_child; ch != kNone; ch = nodes_[ch].next_sibling) {
    if (text_[nodes_[ch].edge_start] == symbol) return ch;
  }
  return kNone;
}

bool SuffixTree::contains(std::span<const std::uint32_t> f) const {
  std::uint32_t id = root();
  std::size_t matched = 0;
  while (matched < f.size()) {
    if (f[matched] == kSentinel) return false;
    const std::uint32_t next = child(id, f[matched]);
    if (next == kNone) return false;
    const Node& n = nodes_[next];
    for (std::uint32_t k = n.edge_start; k < n.edge_end && matched < f.size(); ++k, ++matched) {
      if (text_[k] != f[matched]) return false;
    }
    id = next;
  }
  return true;
}

std::vector<FactorVisit> SuffixTree::preorder_factors() const {
  std::vector<FactorVisit> out;
  out.reserve(nodes_.size());
  preorder([&](const FactorVisit& v) { out.push_back(v); });
  return out;
}

std::string SuffixTree::dump() const {
  std::string out;
  for (const std::uint32_t id : preorder_) {
    const Node& n = nodes_[id];
    out += std::to_string(id) + " parent=" + (n.parent == kNone ? std::string("-") : std::to_string(n.parent)) +
           " span=[" + std::to_string(n.edge_start) + "," + std::to_string(n.edge_end) + ") depth=" +
           std::to_string(n.depth) + "\n";
  }
  return out;
}

SuffixTree build_tree(const RunSequence& r) { return SuffixTree(r.runs); }

}  // namespace bji
