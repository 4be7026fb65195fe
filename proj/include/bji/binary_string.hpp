#pragma once

// Binary strings, run-length ("special pattern") encoding and prefix sums.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bji {

/// Thrown when text that should hold a binary string contains anything other
/// than '0'/'1' (plus an optional trailing newline).
class InvalidDigit : public std::runtime_error {
 public:
  InvalidDigit(std::size_t position, char found);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Immutable sequence of digits in {0,1}.
class BinaryString {
 public:
  BinaryString() = default;
  /// Takes ownership of digits; every element must be 0 or 1.
  explicit BinaryString(std::vector<std::uint8_t> digits);

  /// Parses ASCII '0'/'1'. A single trailing "\n" or "\r\n" is accepted.
  static BinaryString parse(std::string_view text);

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  std::uint8_t operator[](std::size_t i) const noexcept { return digits_[i]; }
  std::span<const std::uint8_t> digits() const noexcept { return digits_; }

  std::size_t count_ones() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BinaryString&, const BinaryString&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

/// Run-length encoding of a binary string together with its first digit.
///
/// Run k (0-based) is a run of `first_digit` when k is even and of the other
/// digit when k is odd. The prefix arrays have one entry per run plus a
/// leading zero, so the slice of runs [i, j) spans
/// boundary_prefix[j] - boundary_prefix[i] digits holding
/// ones_prefix[j] - ones_prefix[i] ones (zeros_prefix likewise for zeros).
struct RunSequence {
  std::uint8_t first_digit = 0;
  std::vector<std::uint32_t> runs;
  std::vector<std::uint32_t> boundary_prefix{0};
  std::vector<std::uint32_t> ones_prefix{0};
  std::vector<std::uint32_t> zeros_prefix{0};

  std::size_t size() const noexcept { return runs.size(); }
  std::size_t length() const noexcept { return boundary_prefix.back(); }

  std::uint8_t digit_of(std::size_t k) const noexcept {
    return static_cast<std::uint8_t>(first_digit ^ (k & 1U));
  }
  bool is_one_run(std::size_t k) const noexcept { return digit_of(k) == 1; }

  std::size_t count_one_runs() const noexcept;
  std::size_t count_zero_runs() const noexcept { return size() - count_one_runs(); }

  /// Builds the prefix arrays from `first_digit` and `runs`. Throws
  /// std::invalid_argument on a zero-length run.
  static RunSequence from_runs(std::uint8_t first_digit, std::vector<std::uint32_t> runs);
};

RunSequence encode_runs(const BinaryString& w);
BinaryString decode_runs(const RunSequence& r);

/// result[i] = number of ones among the first i digits; size n + 1.
std::vector<std::uint32_t> ones_prefix_sums(const BinaryString& w);

}  // namespace bji
