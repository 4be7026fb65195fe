#include "bji/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bji/bench.hpp"
#include "bji/index_io.hpp"
#include "bji/indexers.hpp"
#include "bji/pnf.hpp"

namespace bji::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

BinaryString read_binary(const std::string& path, std::istream& in) {
  const std::string text = slurp(path, in);
  try {
    return BinaryString::parse(text);
  } catch (const InvalidDigit& e) {
    throw InputError(path + ": " + e.what());
  }
}

struct BuildArgs {
  std::string input = "-";
  std::string output;
  std::string format = "word";
  std::string engine = "sftree";
  bool witnesses = false;
};

int cmd_build(const BuildArgs& a, std::istream& in, std::ostream& out) {
  const auto engine = parse_engine(a.engine);
  if (!engine) throw InputError("unknown engine '" + a.engine + "'");
  const IndexFormat format = a.format == "bits" ? IndexFormat::bits : IndexFormat::word;
  const BinaryString w = read_binary(a.input, in);

  const auto start = std::chrono::steady_clock::now();
  const BuildResult result = build(*engine, w, {.witnesses = a.witnesses});
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (a.output == "-") {
    save_index(result.tables, out, format);
  } else {
    std::ofstream file(a.output, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write " + a.output);
    save_index(result.tables, file, format);
    if (!file.flush()) throw InputError("cannot write " + a.output);
    out << "n=" << w.size() << " one_runs=" << result.stats.one_runs << " engine=" << engine_name(*engine)
        << " elapsed_s=" << elapsed << " contributions=" << result.stats.contributions << '\n';
  }
  return kOk;
}

struct QueryArgs {
  std::string index;
  std::uint32_t zeros = 0;
  std::uint32_t ones = 0;
  bool witness = false;
  std::string source;
};

int cmd_query(const QueryArgs& a, std::istream& in, std::ostream& out) {
  IndexTables t;
  try {
    t = load_index(slurp(a.index, in));
  } catch (const IndexParseError& e) {
    throw InputError(a.index + ": " + e.what());
  }
  const ParikhQuery q{a.zeros, a.ones};
  if (!query(t, q)) {
    out << "no\n";
    return kNo;
  }
  if (a.witness && !a.source.empty()) {
    const BinaryString w = read_binary(a.source, in);
    const BuildResult rebuilt = build_sftree(w, {.witnesses = true});
    if (!same_tables(rebuilt.tables, t)) throw InputError("source string does not match the index");
    const auto hit = query_witness(rebuilt.tables, q, w);
    out << "yes " << hit->start << ' ' << hit->length << '\n';
    return kOk;
  }
  out << "yes\n";
  return kOk;
}

int cmd_pnf(const std::string& input, const std::string& literal, std::istream& in, std::ostream& out) {
  BinaryString w;
  if (!literal.empty()) {
    try {
      w = BinaryString::parse(literal);
    } catch (const InvalidDigit& e) {
      throw InputError(e.what());
    }
  } else {
    w = read_binary(input, in);
  }
  const BinaryString form = pnf1(w);
  out << form.to_string() << '\n' << "prefix-normal: " << (form == w ? "yes" : "no") << '\n';
  return kOk;
}

struct BenchArgs {
  std::vector<std::string> engines{"jbm", "sftree"};
  std::vector<std::string> generators{"random"};
  std::vector<std::size_t> sizes{1000};
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::string csv = "-";
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  for (const auto& name : a.engines) {
    const auto e = parse_engine(name);
    if (!e) throw InputError("unknown engine '" + name + "'");
    config.engines.push_back(*e);
  }
  for (const auto& name : a.generators) {
    const auto g = parse_generator(name);
    if (!g) throw InputError("unknown generator '" + name + "'");
    config.generators.push_back(*g);
  }
  config.sizes = a.sizes;
  config.trials = a.trials;
  config.seed = a.seed;

  std::ofstream file;
  std::ostream* csv = &out;
  if (a.csv != "-") {
    file.open(a.csv, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write " + a.csv);
    csv = &file;
  }
  // The summary goes wherever the CSV does not.
  std::ostream& report = a.csv == "-" ? err : out;

  *csv << kCsvHeader << '\n';
  std::vector<BenchRecord> records;
  try {
    records = run_bench(config, [&](const BenchRecord& r) { write_csv_row(*csv, r); });
  } catch (const EngineDisagreement& e) {
    csv->flush();
    err << "error: " << e.what() << '\n';
    return kDisagreement;
  }
  csv->flush();
  print_summary(report, summarize(records));
  return kOk;
}

int cmd_stats(std::size_t n, std::size_t trials, std::uint64_t seed, std::ostream& out) {
  if (n == 0 || trials == 0) throw InputError("stats needs n >= 1 and trials >= 1");
  const RunStats s = run_stats(n, trials, seed);
  const double predicted = static_cast<double>(n) / 4.0;
  out << "n=" << n << " trials=" << trials << " seed=" << seed << '\n'
      << "mean_one_runs=" << s.mean_one_runs << '\n'
      << "predicted_n_over_4=" << predicted << '\n'
      << "relative_error=" << (s.mean_one_runs - predicted) / predicted << '\n'
      << "mean_total_runs=" << s.mean_total_runs << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary jumbled indexing: build and query max-ones/max-zeros index tables"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build_cmd = app.add_subcommand("build", "Build an index file from a binary string");
  build_cmd->add_option("-i,--input", build_args.input, "Binary string file, '-' for stdin");
  build_cmd->add_option("-o,--output", build_args.output, "Index file to write, '-' for stdout")->required();
  build_cmd->add_option("-f,--format", build_args.format, "word or bits")
      ->check(CLI::IsMember({"word", "bits"}));
  build_cmd->add_option("-e,--engine", build_args.engine, "naive, jbm or sftree")
      ->check(CLI::IsMember({"naive", "jbm", "jbm2017", "sftree"}));
  build_cmd->add_flag("-w,--witnesses", build_args.witnesses, "Track and verify witness positions");

  QueryArgs query_args;
  auto* query_cmd = app.add_subcommand("query", "Ask whether a factor with a zeros and b ones exists");
  query_cmd->add_option("-x,--index", query_args.index, "Index file")->required();
  query_cmd->add_option("-a,--zeros", query_args.zeros, "Number of zeros")->required();
  query_cmd->add_option("-b,--ones", query_args.ones, "Number of ones")->required();
  query_cmd->add_flag("-w,--witness", query_args.witness, "Print a matching position (needs --source)");
  query_cmd->add_option("-s,--source", query_args.source, "The indexed binary string, for witnesses");

  std::string pnf_input = "-";
  std::string pnf_literal;
  auto* pnf_cmd = app.add_subcommand("pnf", "Print the 1-prefix normal form");
  pnf_cmd->add_option("-i,--input", pnf_input, "Binary string file, '-' for stdin");
  pnf_cmd->add_option("-s,--string", pnf_literal, "Binary string given inline");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Time engines over generated inputs, emit CSV");
  bench_cmd->add_option("-e,--engines", bench_args.engines, "Comma-separated engines")->delimiter(',');
  bench_cmd->add_option("-g,--generators", bench_args.generators,
                        "Comma-separated: random, interspersed, fibonacci, sorted_runs")
      ->delimiter(',');
  bench_cmd->add_option("-n,--sizes", bench_args.sizes, "Comma-separated string lengths")->delimiter(',');
  bench_cmd->add_option("-t,--trials", bench_args.trials, "Inputs per (generator, n)");
  bench_cmd->add_option("--seed", bench_args.seed, "Base seed");
  bench_cmd->add_option("--csv", bench_args.csv, "CSV destination, '-' for stdout");

  std::size_t stats_n = 10000;
  std::size_t stats_trials = 1000;
  std::uint64_t stats_seed = 1;
  auto* stats_cmd = app.add_subcommand("stats", "Monte Carlo mean of the number of 1-runs");
  stats_cmd->add_option("-n", stats_n, "String length");
  stats_cmd->add_option("-t,--trials", stats_trials, "Number of random strings");
  stats_cmd->add_option("--seed", stats_seed, "Base seed");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kInputError;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(build_args, in, out);
    if (query_cmd->parsed()) return cmd_query(query_args, in, out);
    if (pnf_cmd->parsed()) return cmd_pnf(pnf_input, pnf_literal, in, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_args, out, err);
    if (stats_cmd->parsed()) return cmd_stats(stats_n, stats_trials, stats_seed, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace bji::cli
