#include "bji/index_io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

namespace bji {

namespace {

std::string join_entries(const std::vector<std::uint32_t>& table) {
  std::string line;
  for (std::size_t l = 1; l < table.size(); ++l) {
    if (l > 1) line += ' ';
    line += std::to_string(table[l]);
  }
  return line;
}

std::string bit_line(const std::vector<std::uint32_t>& table) {
  const BitTable bits = to_bit_table(table);
  std::string line(bits.bits.size(), '0');
  for (std::size_t i = 0; i < bits.bits.size(); ++i) line[i] = static_cast<char>('0' + bits.bits[i]);
  return line;
}

// Parses "key=<value>" into value; false on any mismatch.
bool parse_field(std::string_view token, std::string_view key, std::size_t& value) {
  if (!token.starts_with(key) || token.size() <= key.size() || token[key.size()] != '=') return false;
  const std::string_view digits = token.substr(key.size() + 1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return ec == std::errc{} && ptr == digits.data() + digits.size();
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::uint32_t> parse_word_line(std::string_view line, std::size_t n, const char* which) {
  const auto tokens = split_spaces(line);
  if (tokens.size() != n) {
    throw IndexParseError(IndexErrorKind::length_mismatch, std::string(which) + " line has " +
                                                               std::to_string(tokens.size()) + " entries, expected " +
                                                               std::to_string(n));
  }
  std::vector<std::uint32_t> table(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto tok = tokens[i];
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), table[i + 1]);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw IndexParseError(IndexErrorKind::malformed_entry,
                            std::string(which) + " entry " + std::to_string(i + 1) + " is not a count: '" +
                                std::string(tok) + "'");
    }
  }
  return table;
}

std::vector<std::uint32_t> parse_bit_line(std::string_view line, std::size_t n, const char* which) {
  if (line.size() != n) {
    throw IndexParseError(IndexErrorKind::length_mismatch, std::string(which) + " bit line has " +
                                                               std::to_string(line.size()) + " bits, expected " +
                                                               std::to_string(n));
  }
  BitTable bits;
  bits.bits.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (line[i] != '0' && line[i] != '1') {
      throw IndexParseError(IndexErrorKind::malformed_entry,
                            std::string(which) + " bit " + std::to_string(i) + " is not '0' or '1'");
    }
    bits.bits[i] = static_cast<std::uint8_t>(line[i] - '0');
  }
  return bits.prefix_sums();
}

std::string_view strip_cr(std::string_view line) {
  if (line.ends_with('\r')) line.remove_suffix(1);
  return line;
}

}  // namespace

std::string_view format_name(IndexFormat f) noexcept { return f == IndexFormat::word ? "word" : "bits"; }

void save_index(const IndexTables& t, std::ostream& out, IndexFormat format) {
  if (format == IndexFormat::word) {
    out << "BJI word n=" << t.n << '\n' << join_entries(t.max1) << '\n' << join_entries(t.max0) << '\n';
  } else {
    out << "BJI bits n=" << t.n << " ones=" << t.max1[t.n] << '\n'
        << bit_line(t.max1) << '\n'
        << bit_line(t.max0) << '\n';
  }
}

std::string save_index(const IndexTables& t, IndexFormat format) {
  std::ostringstream out;
  save_index(t, out, format);
  return out.str();
}

IndexTables load_index(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return load_index(std::string_view(text));
}

IndexTables load_index(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(strip_cr(text));
      break;
    }
    lines.push_back(strip_cr(text.substr(0, nl)));
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw IndexParseError(IndexErrorKind::malformed_header, "empty index file");

  const auto header = split_spaces(lines[0]);
  std::size_t n = 0;
  std::size_t ones = 0;
  bool bits = false;
  if (header.size() == 3 && header[0] == "BJI" && header[1] == "word" && parse_field(header[2], "n", n)) {
    bits = false;
  } else if (header.size() == 4 && header[0] == "BJI" && header[1] == "bits" && parse_field(header[2], "n", n) &&
             parse_field(header[3], "ones", ones)) {
    bits = true;
  } else {
    throw IndexParseError(IndexErrorKind::malformed_header, "unrecognised header: '" + std::string(lines[0]) + "'");
  }
  if (n >= kNoWitness) throw IndexParseError(IndexErrorKind::malformed_header, "n too large");
  // A trailing blank line after the two tables is tolerated.
  if (lines.size() == 4 && lines[3].empty()) lines.pop_back();
  if (lines.size() != 3) {
    throw IndexParseError(IndexErrorKind::length_mismatch,
                          "expected 3 lines, found " + std::to_string(lines.size()));
  }

  IndexTables t;
  t.n = n;
  if (bits) {
    t.max1 = parse_bit_line(lines[1], n, "max1");
    t.max0 = parse_bit_line(lines[2], n, "max0");
    if (t.max1[n] != ones) {
      throw IndexParseError(IndexErrorKind::invariant_violation,
                            "header ones=" + std::to_string(ones) + " disagrees with max1 bits");
    }
  } else {
    t.max1 = parse_word_line(lines[1], n, "max1");
    t.max0 = parse_word_line(lines[2], n, "max0");
  }
  if (auto bad = check_invariants(t)) throw IndexParseError(IndexErrorKind::invariant_violation, *bad);
  return t;
}

}  // namespace bji
