#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bji/generators.hpp"

using namespace bji;

TEST_CASE("deterministic families") {
  CHECK(gen_interspersed(6).to_string() == "010101");
  CHECK(gen_interspersed(0).empty());
  CHECK(gen_fibonacci(13).to_string() == "0100101001001");
  CHECK(gen_fibonacci(1).to_string() == "0");
  CHECK(gen_fibonacci(0).empty());
  CHECK(gen_sorted_runs(20).to_string() == "10110011100011110000");
  CHECK(gen_sorted_runs(4).to_string() == "1011");
}

TEST_CASE("sorted runs of length rho^2 + rho hold rho one-runs") {
  for (std::size_t rho = 1; rho <= 60; ++rho) {
    const auto r = encode_runs(gen_sorted_runs(rho * rho + rho));
    CHECK(r.count_one_runs() == rho);
    CHECK(r.count_zero_runs() == rho);
  }
}

TEST_CASE("interspersed strings have floor(n/2) one-runs") {
  for (std::size_t n = 0; n <= 101; ++n) CHECK(encode_runs(gen_interspersed(n)).count_one_runs() == n / 2);
}

TEST_CASE("Fibonacci prefixes have no 1-run longer than 1 and no 0-run longer than 2") {
  const auto r = encode_runs(gen_fibonacci(10000));
  for (std::size_t k = 0; k < r.size(); ++k) CHECK(r.runs[k] <= (r.is_one_run(k) ? 1U : 2U));
}

TEST_CASE("random strings are deterministic per seed") {
  CHECK(gen_random(1000, 5) == gen_random(1000, 5));
  CHECK_FALSE(gen_random(1000, 5) == gen_random(1000, 6));
  CHECK(gen_random(0, 5).empty());
  // A prefix of a longer draw is the shorter draw.
  CHECK(gen_random(70, 9).to_string() == gen_random(200, 9).to_string().substr(0, 70));
  CHECK(generate(Generator::random, 100, 3) == gen_random(100, 3));
  CHECK(generate(Generator::fibonacci, 100, 3) == gen_fibonacci(100));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) == trial_seed(1, 0));
}

TEST_CASE("random digits are balanced") {
  // 2^20 fair coins: the ones count is within 5 standard deviations of half.
  const std::size_t n = 1U << 20;
  const double ones = static_cast<double>(gen_random(n, 77).count_ones());
  CHECK(std::abs(ones - n / 2.0) < 5.0 * std::sqrt(n / 4.0));
}

TEST_CASE("mean 1-run counts") {
  const RunStats big = run_stats(10000, 1000, 1);
  CHECK(std::abs(big.mean_one_runs - 2500.0) / 2500.0 <= 0.01);
  CHECK(std::abs(big.mean_total_runs - 5000.5) / 5000.5 <= 0.01);

  const RunStats one = run_stats(1, 20000, 2);
  CHECK(one.mean_one_runs == doctest::Approx(0.5).epsilon(0.03));
  CHECK(one.mean_total_runs == 1.0);

  const RunStats four = run_stats(4, 100000, 3);
  CHECK(four.mean_one_runs == doctest::Approx(1.25).epsilon(0.01));
  CHECK(four.mean_total_runs == doctest::Approx(2.5).epsilon(0.01));

  CHECK_THROWS_AS(run_stats(0, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_stats(10, 0, 1), std::invalid_argument);
}

TEST_CASE("generator names") {
  for (const Generator g : {Generator::random, Generator::interspersed, Generator::fibonacci, Generator::sorted_runs}) {
    CHECK(parse_generator(generator_name(g)) == g);
  }
  CHECK_FALSE(parse_generator("zipf").has_value());
}
