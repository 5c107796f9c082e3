#include "rri/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace rri::csv {

namespace {

std::vector<std::string_view> split_fields(std::string_view row) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = row.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(row.substr(start));
      return out;
    }
    out.push_back(row.substr(start, comma - start));
    start = comma + 1;
  }
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Reader::Reader(std::istream& in, std::span<const std::string_view> header,
               std::string_view source)
    : in_(in), source_(source), n_cols_(header.size()) {
  std::string line;
  if (!std::getline(in_, line)) {
    throw ParseError("empty file: " + source_);
  }
  strip_cr(line);
  ++line_;
  const auto fields = split_fields(line);
  bool ok = fields.size() == header.size();
  for (std::size_t i = 0; ok && i < fields.size(); ++i) ok = fields[i] == header[i];
  if (!ok) {
    std::string expected;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) expected += ',';
      expected += header[i];
    }
    throw ParseError("bad header in " + source_ + ": expected '" + expected +
                         "', got '" + line + "'",
                     line_);
  }
}

bool Reader::next(std::vector<std::string>& fields) {
  std::string line;
  while (std::getline(in_, line)) {
    strip_cr(line);
    ++line_;
    if (line.empty()) continue;  // tolerate a trailing blank line
    const auto views = split_fields(line);
    if (views.size() != n_cols_) {
      throw ParseError("malformed row in " + source_ + ": expected " +
                           std::to_string(n_cols_) + " fields, got " +
                           std::to_string(views.size()),
                       line_);
    }
    fields.assign(views.begin(), views.end());
    ++rows_;
    return true;
  }
  return false;
}

double parse_double(std::string_view field, std::string_view column, std::size_t line) {
  double v{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("bad numeric value '" + std::string(field) + "' in column " +
                         std::string(column),
                     line);
  }
  return v;
}

std::int64_t parse_int64(std::string_view field, std::string_view column, std::size_t line) {
  std::int64_t v{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError("bad integer value '" + std::string(field) + "' in column " +
                         std::string(column),
                     line);
  }
  return v;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general);
  return std::string(buf, res.ptr);
}

void write_row(std::ostream& out, std::span<const std::string> fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << fields[i];
  }
  out << '\n';
}

}  // namespace rri::csv
