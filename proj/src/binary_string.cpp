#include "bji/binary_string.hpp"

#include <algorithm>
#include <string>

namespace bji {

namespace {

std::string describe(std::size_t position, char found) {
  std::string msg = "invalid digit at position " + std::to_string(position) + ": ";
  if (found >= 0x20 && found < 0x7f) {
    msg += '\'';
    msg += found;
    msg += '\'';
  } else {
    msg += "byte " + std::to_string(static_cast<unsigned char>(found));
  }
  return msg;
}

}  // namespace

InvalidDigit::InvalidDigit(std::size_t position, char found)
    : std::runtime_error(describe(position, found)), position_(position) {}

BinaryString::BinaryString(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] > 1) throw InvalidDigit(i, static_cast<char>('0' + digits_[i]));
  }
}

BinaryString BinaryString::parse(std::string_view text) {
  if (text.ends_with('\n')) {
    text.remove_suffix(1);
    if (text.ends_with('\r')) text.remove_suffix(1);
  }
  std::vector<std::uint8_t> digits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') throw InvalidDigit(i, c);
    digits[i] = static_cast<std::uint8_t>(c - '0');
  }
  BinaryString out;
  out.digits_ = std::move(digits);
  return out;
}

std::size_t BinaryString::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), std::uint8_t{1}));
}

std::string BinaryString::to_string() const {
  std::string s(digits_.size(), '0');
  for (std::size_t i = 0; i < digits_.size(); ++i) s[i] = static_cast<char>('0' + digits_[i]);
  return s;
}

std::size_t RunSequence::count_one_runs() const noexcept {
  // Runs alternate, so the 1-runs are either the even or the odd positions.
  const std::size_t even = (runs.size() + 1) / 2;
  return first_digit == 1 ? even : runs.size() - even;
}

RunSequence RunSequence::from_runs(std::uint8_t first_digit, std::vector<std::uint32_t> runs) {
  if (first_digit > 1) throw std::invalid_argument("first digit must be 0 or 1");
  RunSequence r;
  r.first_digit = first_digit;
  r.runs = std::move(runs);
  r.boundary_prefix.resize(r.runs.size() + 1);
  r.ones_prefix.resize(r.runs.size() + 1);
  r.zeros_prefix.resize(r.runs.size() + 1);
  for (std::size_t k = 0; k < r.runs.size(); ++k) {
    if (r.runs[k] == 0) throw std::invalid_argument("run lengths must be positive");
    r.boundary_prefix[k + 1] = r.boundary_prefix[k] + r.runs[k];
    r.ones_prefix[k + 1] = r.ones_prefix[k] + (r.is_one_run(k) ? r.runs[k] : 0);
    r.zeros_prefix[k + 1] = r.boundary_prefix[k + 1] - r.ones_prefix[k + 1];
  }
  return r;
}

RunSequence encode_runs(const BinaryString& w) {
  std::vector<std::uint32_t> runs;
  if (w.empty()) return RunSequence::from_runs(0, {});
  std::uint32_t current = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) {
      ++current;
    } else {
      runs.push_back(current);
      current = 1;
    }
  }
  runs.push_back(current);
  return RunSequence::from_runs(w[0], std::move(runs));
}

BinaryString decode_runs(const RunSequence& r) {
  std::vector<std::uint8_t> digits;
  digits.reserve(r.length());
  for (std::size_t k = 0; k < r.runs.size(); ++k) digits.insert(digits.end(), r.runs[k], r.digit_of(k));
  return BinaryString(std::move(digits));
}

std::vector<std::uint32_t> ones_prefix_sums(const BinaryString& w) {
  std::vector<std::uint32_t> sums(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) sums[i + 1] = sums[i] + w[i];
  return sums;
}

}  // namespace bji
