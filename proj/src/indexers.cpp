#include "bji/indexers.hpp"

#include <algorithm>
#include <vector>

#include "bji/kernels/scatter_max.hpp"

namespace bji {

namespace {

using kernels::StridedRange;

// Applies one strided range to max1 or max0, tracking witnesses if present.
struct TableSink {
  IndexTables& tables;
  kernels::ScatterMaxFn fn;

  void apply(const StridedRange& range, bool ones_table) {
    if (range.count == 0) return;
    auto& table = ones_table ? tables.max1 : tables.max0;
    if (tables.has_witnesses()) {
      auto& wit = ones_table ? *tables.witness1 : *tables.witness0;
      kernels::scatter_max_witness(range, table.data(), wit.data());
    } else {
      fn(range, table.data());
    }
  }
};

// Prefix arrays split by run-index parity: entry k of the full array lives
// at [k % 2][k / 2], so a stride-2 walk becomes a contiguous one.
struct ParityLayout {
  std::vector<std::uint32_t> pos[2];
  std::vector<std::uint32_t> ones[2];
  std::vector<std::uint32_t> zeros[2];

  explicit ParityLayout(const RunSequence& r) {
    for (std::size_t k = 0; k < r.boundary_prefix.size(); ++k) {
      pos[k % 2].push_back(r.boundary_prefix[k]);
      ones[k % 2].push_back(r.ones_prefix[k]);
      zeros[k % 2].push_back(r.zeros_prefix[k]);
    }
  }
};

std::uint64_t index_factor_into(const FactorVisit& v, const RunSequence& r, const ParityLayout& layout,
                                TableSink& sink) {
  const std::uint32_t depth = v.depth();
  const std::uint32_t first = v.parent_depth % 2 == 0 ? v.parent_depth + 1 : v.parent_depth + 2;
  if (first > depth) return 0;
  const std::size_t count = (depth - first) / 2 + 1;
  std::uint64_t done = 0;
  for (const std::uint32_t start : v.start_by_parity) {
    if (start == FactorVisit::kNone) continue;
    const bool ones = r.is_one_run(start);
    const std::uint32_t end = start + first;
    const auto& cnt = ones ? layout.ones[end % 2] : layout.zeros[end % 2];
    StridedRange range;
    range.pos = layout.pos[end % 2].data();
    range.cnt = cnt.data();
    range.first = end / 2;
    range.count = count;
    range.stride = 1;
    range.pos_base = r.boundary_prefix[start];
    range.cnt_base = ones ? r.ones_prefix[start] : r.zeros_prefix[start];
    sink.apply(range, ones);
    done += count;
  }
  return done;
}

void count_runs(const RunSequence& r, BuildStats& stats) {
  stats.one_runs = r.count_one_runs();
  stats.zero_runs = r.count_zero_runs();
}

}  // namespace

std::string_view engine_name(Engine e) noexcept {
  switch (e) {
    case Engine::naive:
      return "naive";
    case Engine::jbm2017:
      return "jbm";
    case Engine::sftree:
      return "sftree";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
  if (name == "naive") return Engine::naive;
  if (name == "jbm" || name == "jbm2017") return Engine::jbm2017;
  if (name == "sftree") return Engine::sftree;
  return std::nullopt;
}

BuildResult build_naive(const BinaryString& w, BuildOptions opts) {
  const std::size_t n = w.size();
  BuildResult out{IndexTables(n, opts.witnesses), {}};
  count_runs(encode_runs(w), out.stats);
  const auto sums = ones_prefix_sums(w);
  auto& t = out.tables;
  for (std::size_t l = 1; l <= n; ++l) {
    std::uint32_t most = 0;
    std::uint32_t least = static_cast<std::uint32_t>(l);
    std::size_t most_at = 0;
    std::size_t least_at = 0;
    std::uint32_t ones = sums[l];
    for (std::size_t p = 0;; ++p) {
      if (ones > most || p == 0) {
        most = ones;
        most_at = p;
      }
      if (ones < least || p == 0) {
        least = ones;
        least_at = p;
      }
      if (p + l == n) break;
      ones = ones - w[p] + w[p + l];
    }
    out.stats.contributions += n - l + 1;
    t.max1[l] = most;
    t.max0[l] = static_cast<std::uint32_t>(l) - least;
    if (opts.witnesses) {
      (*t.witness1)[l] = static_cast<std::uint32_t>(most_at);
      (*t.witness0)[l] = static_cast<std::uint32_t>(least_at);
    }
  }
  finalize_tables(t, sums);
  return out;
}

BuildResult build_jbm2017(const BinaryString& w, BuildOptions opts) {
  const std::size_t n = w.size();
  BuildResult out{IndexTables(n, opts.witnesses), {}};
  const RunSequence r = encode_runs(w);
  count_runs(r, out.stats);
  TableSink sink{out.tables, kernels::kernel_for(kernels::active_isa())};

  std::vector<std::uint32_t> start_pos;
  std::vector<std::uint32_t> start_cnt;
  std::vector<std::uint32_t> end_pos;
  std::vector<std::uint32_t> end_cnt;
  for (const std::uint8_t digit : {std::uint8_t{1}, std::uint8_t{0}}) {
    const auto& cnt = digit == 1 ? r.ones_prefix : r.zeros_prefix;
    start_pos.clear();
    start_cnt.clear();
    end_pos.clear();
    end_cnt.clear();
    for (std::size_t k = r.first_digit == digit ? 0 : 1; k < r.size(); k += 2) {
      start_pos.push_back(r.boundary_prefix[k]);
      start_cnt.push_back(cnt[k]);
      end_pos.push_back(r.boundary_prefix[k + 1]);
      end_cnt.push_back(cnt[k + 1]);
    }
    // Factor from the start of run i to the end of run j, for every i <= j.
    const std::size_t runs = start_pos.size();
    for (std::size_t i = 0; i < runs; ++i) {
      StridedRange range;
      range.pos = end_pos.data();
      range.cnt = end_cnt.data();
      range.first = i;
      range.count = runs - i;
      range.stride = 1;
      range.pos_base = start_pos[i];
      range.cnt_base = start_cnt[i];
      sink.apply(range, digit == 1);
    }
    out.stats.contributions += static_cast<std::uint64_t>(runs) * (runs + 1) / 2;
  }
  finalize_tables(out.tables, opts.witnesses ? ones_prefix_sums(w) : std::vector<std::uint32_t>{});
  return out;
}

std::uint64_t index_factor(const FactorVisit& v, const RunSequence& r, IndexTables& t) {
  TableSink sink{t, kernels::kernel_for(kernels::active_isa())};
  return index_factor_into(v, r, ParityLayout(r), sink);
}

BuildResult build_sftree(const BinaryString& w, BuildOptions opts) {
  const std::size_t n = w.size();
  BuildResult out{IndexTables(n, opts.witnesses), {}};
  const RunSequence r = encode_runs(w);
  count_runs(r, out.stats);
  TableSink sink{out.tables, kernels::kernel_for(kernels::active_isa())};

  const ParityLayout layout(r);
  const SuffixTree tree = build_tree(r);
  tree.preorder([&](const FactorVisit& v) {
    ++out.stats.nodes_visited;
    out.stats.contributions += index_factor_into(v, r, layout, sink);
  });
  finalize_tables(out.tables, opts.witnesses ? ones_prefix_sums(w) : std::vector<std::uint32_t>{});
  return out;
}

BuildResult build(Engine e, const BinaryString& w, BuildOptions opts) {
  switch (e) {
    case Engine::naive:
      return build_naive(w, opts);
    case Engine::jbm2017:
      return build_jbm2017(w, opts);
    case Engine::sftree:
      return build_sftree(w, opts);
  }
  return build_naive(w, opts);
}

}  // namespace bji
