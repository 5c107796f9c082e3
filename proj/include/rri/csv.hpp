#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rri/types.hpp"

namespace rri::csv {

/// Strict line-oriented CSV reader: fixed column count, required header,
/// UTF-8, LF or CRLF. Reports 1-based line numbers on failure.
class Reader {
 public:
  Reader(std::istream& in, std::span<const std::string_view> header,
         std::string_view source);

  /// Fills `fields` with the next data row. Returns false at end of input.
  bool next(std::vector<std::string>& fields);

  std::size_t line() const { return line_; }
  std::size_t rows_read() const { return rows_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t n_cols_;
  std::size_t line_{0};
  std::size_t rows_{0};
};

double parse_double(std::string_view field, std::string_view column, std::size_t line);
std::int64_t parse_int64(std::string_view field, std::string_view column, std::size_t line);

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

void write_row(std::ostream& out, std::span<const std::string> fields);

}  // namespace rri::csv
