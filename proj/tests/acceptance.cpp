// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bji/generators.hpp"
#include "bji/index_io.hpp"
#include "bji/indexers.hpp"
#include "bji/pnf.hpp"
#include "oracle.hpp"

using namespace bji;

namespace {

using Table = std::vector<std::uint32_t>;
using Result = std::optional<std::string>;  // failure message, or nothing on success

constexpr Engine kEngines[] = {Engine::naive, Engine::jbm2017, Engine::sftree};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Result all_engines_agree(const BinaryString& w) {
  const auto ref = build_naive(w).tables;
  for (const Engine e : {Engine::jbm2017, Engine::sftree}) {
    const auto t = build(e, w).tables;
    if (t.max1 != ref.max1 || t.max0 != ref.max0) {
      return fmt("%s differs from naive on %s", std::string(engine_name(e)).c_str(), w.to_string().c_str());
    }
  }
  return std::nullopt;
}

Result criterion1(std::string& note) {
  std::size_t strings = 0;
  for (std::size_t n = 1; n <= 16; ++n) {
    for (std::uint64_t v = 0; v < (1ULL << n); ++v, ++strings) {
      const std::string s = oracle::bits_of(v, n);
      const BinaryString w = BinaryString::parse(s);
      if (auto r = all_engines_agree(w)) return r;
      // Spot-check the common table against brute force on short strings.
      if (n <= 10 && build_naive(w).tables.max1 != oracle::brute_tables(s).max1) return "naive differs from brute force on " + s;
    }
  }
  note = fmt("%zu strings", strings);
  return std::nullopt;
}

Result criterion2(std::string& note) {
  for (std::size_t t = 0; t < 1000; ++t) {
    if (auto r = all_engines_agree(gen_random(1000, trial_seed(2024, t)))) return r;
  }
  note = "1000 strings of length 1000";
  return std::nullopt;
}

Result criterion3(std::string&) {
  const auto a = build_sftree(BinaryString::parse("11011001")).tables;
  if (Table(a.max1.begin() + 1, a.max1.end()) != Table{1, 2, 2, 3, 4, 4, 4, 5}) return "max1 of 11011001";
  Table min1;
  for (std::size_t l = 1; l <= 8; ++l) min1.push_back(min1_of(a, l));
  if (min1 != Table{0, 0, 1, 2, 2, 3, 4, 5}) return "min1 of 11011001";

  const BinaryString b = BinaryString::parse("010101110101");
  for (const Engine e : kEngines) {
    const auto t = build(e, b).tables;
    if (Table(t.max1.begin() + 1, t.max1.end()) != Table{1, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7}) return "max1 of 010101110101";
    if (to_bit_table(t).bits != std::vector<std::uint8_t>{1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0}) return "bit table";
  }
  if (pnf1(b).to_string() != "111010101010") return "PNF of 010101110101";
  if (!is_prefix_normal(BinaryString::parse("1101001"))) return "1101001 should be prefix-normal";
  if (is_prefix_normal(BinaryString::parse("1001011"))) return "1001011 should not be prefix-normal";
  return std::nullopt;
}

Result criterion4(std::string& note) {
  std::size_t queries = 0;
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
      const std::string s = oracle::bits_of(v, n);
      const auto set = oracle::parikh_set(s);
      for (const Engine e : kEngines) {
        const auto t = build(e, BinaryString::parse(s)).tables;
        for (std::uint32_t a = 0; a <= n; ++a) {
          for (std::uint32_t b = 0; a + b <= n; ++b, ++queries) {
            if (query(t, {a, b}) != (set.count({a, b}) == 1)) return fmt("query(%u,%u) on %s", a, b, s.c_str());
          }
        }
      }
    }
  }
  // The listed Parikh set of 01101 holds the vectors of factors of length at least 2.
  const auto t = build_sftree(BinaryString::parse("01101")).tables;
  std::set<std::pair<std::uint32_t, std::uint32_t>> listed;
  for (std::uint32_t a = 0; a <= 5; ++a) {
    for (std::uint32_t b = 0; a + b <= 5; ++b) {
      if (a + b >= 2 && query(t, {a, b})) listed.insert({a, b});
    }
  }
  const std::set<std::pair<std::uint32_t, std::uint32_t>> expected{{1, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 2}, {2, 3}};
  if (listed != expected) return "Parikh set of 01101";
  if (!query(t, {0, 0}) || !query(t, {0, 1}) || !query(t, {1, 0})) return "short vectors of 01101";
  note = fmt("%zu queries", queries);
  return std::nullopt;
}

Result criterion5(std::string& note) {
  std::mt19937_64 rng(55);
  std::size_t positives = 0;
  std::size_t negatives = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = rng() % 501;
    const BinaryString w = gen_random(n, rng());
    const std::string s = w.to_string();
    const auto sums = ones_prefix_sums(w);
    std::vector<std::uint8_t> present((n + 1) * (n + 1), 0);
    for (const auto& [a, b] : oracle::parikh_set(s)) present[a * (n + 1) + b] = 1;
    for (const Engine e : kEngines) {
      const auto t = build(e, w, {.witnesses = true}).tables;
      for (std::uint32_t a = 0; a <= n; ++a) {
        for (std::uint32_t b = 0; a + b <= n; ++b) {
          const auto hit = query_witness(t, {a, b}, sums);
          if (hit) {
            ++positives;
            if (hit->length != a + b || hit->start + hit->length > n ||
                sums[hit->start + hit->length] - sums[hit->start] != b) {
              return fmt("bad witness for (%u,%u) on a length-%zu string", a, b, n);
            }
          } else {
            ++negatives;
          }
          if (hit.has_value() != (present[a * (n + 1) + b] == 1)) return fmt("query_witness(%u,%u) disagrees with oracle", a, b);
        }
      }
    }
  }
  note = fmt("%zu positive, %zu negative", positives, negatives);
  return std::nullopt;
}

Result criterion6(std::string& note) {
  double worst_c = 0.0;
  for (const std::size_t n : {1000, 10000, 100000}) {
    const BinaryString w = gen_interspersed(n);
    const auto sf = build_sftree(w).stats;
    const auto jbm = build_jbm2017(w).stats;
    const std::uint64_t r1 = n / 2;
    const std::uint64_t r0 = n - n / 2;
    if (jbm.one_runs != r1) return fmt("rho_1 = %zu at n=%zu", jbm.one_runs, n);
    if (jbm.contributions != r1 * (r1 + 1) / 2 + r0 * (r0 + 1) / 2) return fmt("JBM pair count at n=%zu", n);
    const double c = static_cast<double>(sf.contributions) / static_cast<double>(n);
    worst_c = std::max(worst_c, c);
    if (c > 1.0) return fmt("SFTree contributions %.3f n at n=%zu", c, n);
  }
  double lo = 1e300;
  double hi = 0.0;
  for (const std::size_t n : {10000, 100000, 1000000}) {
    const double c = static_cast<double>(build_sftree(gen_sorted_runs(n)).stats.contributions) / static_cast<double>(n);
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  if (hi > 2.0 || lo < 0.25 || hi / lo > 1.5) return fmt("sorted_runs contributions per digit range %.3f..%.3f", lo, hi);
  note = fmt("interspersed SFTree <= %.2f n; sorted_runs SFTree %.2f..%.2f n", worst_c, lo, hi);
  return std::nullopt;
}

double seconds_for(Engine e, const BinaryString& w) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = build(e, w);
  const auto stop = std::chrono::steady_clock::now();
  if (r.tables.n != w.size()) std::abort();
  return std::chrono::duration<double>(stop - start).count();
}

double best_of(Engine e, const BinaryString& w, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) best = std::min(best, seconds_for(e, w));
  return best;
}

Result criterion7(std::string& note) {
  std::vector<std::string> failures;

  const BinaryString small = gen_interspersed(50000);
  const BinaryString large = gen_interspersed(100000);
  const double sf_ratio = best_of(Engine::sftree, large, 5) / best_of(Engine::sftree, small, 5);
  const double jbm_ratio = best_of(Engine::jbm2017, large, 3) / best_of(Engine::jbm2017, small, 3);
  if (sf_ratio > 2.8) failures.push_back(fmt("interspersed SFTree doubling ratio %.2f > 2.8", sf_ratio));
  if (jbm_ratio < 3.0) failures.push_back(fmt("interspersed JBM doubling ratio %.2f < 3.0", jbm_ratio));

  double sf_sum = 0.0;
  double jbm_sum = 0.0;
  constexpr std::size_t kTrials = 50;
  for (std::size_t t = 0; t < kTrials; ++t) {
    const BinaryString w = gen_random(10000, trial_seed(7, t));
    jbm_sum += seconds_for(Engine::jbm2017, w);
    sf_sum += seconds_for(Engine::sftree, w);
  }
  const double random_ratio = sf_sum / jbm_sum;
  if (random_ratio > 0.5) failures.push_back(fmt("random n=10000 SFTree/JBM %.2f > 0.5", random_ratio));

  const BinaryString fib = gen_fibonacci(50000);
  const double fib_ratio = best_of(Engine::sftree, fib, 3) / best_of(Engine::jbm2017, fib, 3);
  if (fib_ratio > 0.5) failures.push_back(fmt("fibonacci n=50000 SFTree/JBM %.2f > 0.5", fib_ratio));

  note = fmt("interspersed x2: SFTree %.2f, JBM %.2f; random SFTree/JBM %.2f; fibonacci SFTree/JBM %.2f", sf_ratio,
             jbm_ratio, random_ratio, fib_ratio);
  if (failures.empty()) return std::nullopt;
  std::string joined;
  for (const auto& f : failures) joined += (joined.empty() ? "" : "; ") + f;
  return joined + " (" + note + ")";
}

Result criterion8(std::string& note) {
  const RunStats s = run_stats(10000, 1000, 1);
  const double rel = std::abs(s.mean_one_runs - 2500.0) / 2500.0;
  note = fmt("mean %.2f, relative error %.5f", s.mean_one_runs, rel);
  if (rel > 0.01) return note;
  return std::nullopt;
}

Result criterion9(std::string&) {
  for (std::size_t t = 0; t < 100; ++t) {
    const BinaryString w = gen_random(1 + t * 13, trial_seed(9, t));
    const auto tables = build_sftree(w).tables;
    for (const IndexFormat f : {IndexFormat::word, IndexFormat::bits}) {
      const IndexTables back = load_index(save_index(tables, f));
      if (!same_tables(back, tables)) return fmt("%s round trip failed at n=%zu", std::string(format_name(f)).c_str(), w.size());
    }
    if (to_bit_table(tables).prefix_sums() != tables.max1) return fmt("bit prefix sums at n=%zu", w.size());
  }
  return std::nullopt;
}

std::set<std::vector<std::uint32_t>> tree_factors(const SuffixTree& t) {
  std::set<std::vector<std::uint32_t>> out;
  const auto text = t.text();
  for (const FactorVisit& v : t.preorder_factors()) {
    for (std::uint32_t k = v.parent_depth + 1; k <= v.depth(); ++k) {
      out.insert(std::vector<std::uint32_t>(text.begin() + v.run_start, text.begin() + v.run_start + k));
    }
  }
  return out;
}

Result criterion10(std::string& note) {
  std::mt19937_64 rng(10);
  std::size_t checked = 0;
  auto check = [&](const std::vector<std::uint32_t>& runs) -> Result {
    ++checked;
    const SuffixTree t(runs);
    const std::size_t rho = runs.size();
    if (t.leaf_count() != rho + 1) return fmt("leaf count %zu for rho=%zu", t.leaf_count(), rho);
    if (rho >= 1 && t.node_count() > 2 * rho + 1) return fmt("node count %zu for rho=%zu", t.node_count(), rho);
    std::size_t distinct = 0;
    for (const FactorVisit& v : t.preorder_factors()) distinct += v.depth() - v.parent_depth;
    const auto expected = oracle::distinct_factors(runs);
    if (distinct != expected.size() || tree_factors(t) != expected) return fmt("factor set differs for rho=%zu", rho);
    return std::nullopt;
  };
  for (std::size_t rho = 0; rho <= 200; ++rho) {
    std::vector<std::uint32_t> runs(rho);
    const std::uint32_t alphabet = 1 + static_cast<std::uint32_t>(rng() % 5);
    for (auto& x : runs) x = 1 + static_cast<std::uint32_t>(rng() % alphabet);
    if (auto r = check(runs)) return r;
  }
  for (const Generator g : {Generator::random, Generator::fibonacci, Generator::sorted_runs, Generator::interspersed}) {
    for (const std::size_t n : {50, 150, 280}) {
      auto runs = encode_runs(generate(g, n, n)).runs;
      if (runs.size() > 200) runs.resize(200);
      if (auto r = check(runs)) return r;
    }
  }
  note = fmt("%zu run sequences", checked);
  return std::nullopt;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result(std::string&)>>> criteria{
      {"exhaustive engine equivalence, n = 1..16", criterion1},
      {"randomized engine equivalence, 1000 x n=1000", criterion2},
      {"golden tables, bit table, PNF and prefix normality", criterion3},
      {"query semantics against Parikh sets, n <= 12", criterion4},
      {"witness soundness, 200 strings of length <= 500", criterion5},
      {"complexity counters", criterion6},
      {"timing shape", criterion7},
      {"mean 1-run count for n=10000 over 1000 trials", criterion8},
      {"index persistence round trip", criterion9},
      {"suffix tree structure, rho <= 200", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [title, fn] = criteria[i];
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = fn(note);
    } catch (const std::exception& e) {
      r = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r) {
      ++failed;
      std::printf("[FAIL] criterion %zu: %s: %s (%.1fs)\n", i + 1, title, r->c_str(), secs);
    } else {
      std::printf("[PASS] criterion %zu: %s%s%s (%.1fs)\n", i + 1, title, note.empty() ? "" : ": ", note.c_str(), secs);
    }
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
