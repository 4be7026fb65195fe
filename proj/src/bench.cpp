#include "bji/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <tuple>

namespace bji {

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <typename T>
T parse_number(std::string_view field, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("CSV line " + std::to_string(line) + ": bad number '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   const std::function<void(const BenchRecord&)>& on_record) {
  std::vector<BenchRecord> records;
  std::vector<BenchRecord> pending;
  for (const Generator gen : config.generators) {
    for (const std::size_t n : config.sizes) {
      for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t seed = trial_seed(config.seed, trial);
        const BinaryString w = generate(gen, n, seed);
        std::optional<IndexTables> reference;
        Engine reference_engine{};
        pending.clear();
        for (const Engine engine : config.engines) {
          const auto start = std::chrono::steady_clock::now();
          BuildResult result = build(engine, w);
          const auto stop = std::chrono::steady_clock::now();

          if (!reference) {
            reference = std::move(result.tables);
            reference_engine = engine;
          } else if (!same_tables(*reference, result.tables)) {
            throw EngineDisagreement(std::string(engine_name(engine)) + " and " +
                                     std::string(engine_name(reference_engine)) + " disagree on " +
                                     std::string(generator_name(gen)) + " n=" + std::to_string(n) +
                                     " trial=" + std::to_string(trial));
          }
          BenchRecord rec;
          rec.algorithm = engine_name(engine);
          rec.generator = generator_name(gen);
          rec.n = n;
          rec.trial = trial;
          rec.seed = seed;
          rec.elapsed_s = std::chrono::duration<double>(stop - start).count();
          rec.contributions = result.stats.contributions;
          rec.rho_ones = result.stats.one_runs;
          pending.push_back(std::move(rec));
        }
        for (auto& rec : pending) {
          if (on_record) on_record(rec);
          records.push_back(std::move(rec));
        }
      }
    }
  }
  return records;
}

void write_csv_row(std::ostream& out, const BenchRecord& r) {
  out << r.algorithm << ',' << r.generator << ',' << r.n << ',' << r.trial << ',' << r.seed << ','
      << format_double(r.elapsed_s) << ',' << r.contributions << ',' << r.rho_ones << '\n';
}

std::vector<BenchRecord> parse_csv(std::string_view text) {
  std::vector<BenchRecord> out;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != kCsvHeader) throw std::runtime_error("CSV header mismatch");
      seen_header = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 8) throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected 8 fields");
    BenchRecord r;
    r.algorithm = fields[0];
    r.generator = fields[1];
    r.n = parse_number<std::size_t>(fields[2], line_no);
    r.trial = parse_number<std::size_t>(fields[3], line_no);
    r.seed = parse_number<std::uint64_t>(fields[4], line_no);
    r.elapsed_s = parse_number<double>(fields[5], line_no);
    r.contributions = parse_number<std::uint64_t>(fields[6], line_no);
    r.rho_ones = parse_number<std::size_t>(fields[7], line_no);
    out.push_back(std::move(r));
  }
  if (!seen_header) throw std::runtime_error("CSV header missing");
  return out;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
  std::vector<BenchSummary> rows;
  for (const auto& r : records) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const BenchSummary& s) {
      return std::tie(s.algorithm, s.generator, s.n) == std::tie(r.algorithm, r.generator, r.n);
    });
    if (it == rows.end()) {
      rows.push_back({r.algorithm, r.generator, r.n, 0, r.elapsed_s, r.elapsed_s, 0.0, 0.0});
      it = rows.end() - 1;
    }
    it->min_s = std::min(it->min_s, r.elapsed_s);
    it->max_s = std::max(it->max_s, r.elapsed_s);
    it->avg_s += r.elapsed_s;
    it->avg_contributions += static_cast<double>(r.contributions);
    ++it->runs;
  }
  for (auto& s : rows) {
    s.avg_s /= static_cast<double>(s.runs);
    s.avg_contributions /= static_cast<double>(s.runs);
  }
  return rows;
}

void print_summary(std::ostream& out, const std::vector<BenchSummary>& rows) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-8s %-13s %9s %6s %11s %11s %11s %14s\n", "engine", "generator", "n", "runs",
                "min_s", "max_s", "avg_s", "avg_contrib");
  out << buf;
  for (const auto& s : rows) {
    std::snprintf(buf, sizeof buf, "%-8s %-13s %9zu %6zu %11.6f %11.6f %11.6f %14.0f\n", s.algorithm.c_str(),
                  s.generator.c_str(), s.n, s.runs, s.min_s, s.max_s, s.avg_s, s.avg_contributions);
    out << buf;
  }
}

}  // namespace bji
