#include "patfolio/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "patfolio/error.hpp"

namespace patfolio::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::io, "cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void write_file_atomically(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::io, "cannot open '" + tmp.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::io, "short write to '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::io, "cannot replace '" + path.string() + "'");
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  out = split(text, '\n');
  if (!out.empty() && out.back().empty()) out.pop_back();
  for (auto& line : out) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  return out;
}

std::string_view trim(std::string_view text) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  auto first = text.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = text.find_last_not_of(ws);
  return text.substr(first, last - first + 1);
}

double parse_real(std::string_view field, std::string_view what) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw Error(ErrorCode::format,
                "expected a number for " + std::string(what) + ", got '" + std::string(field) + "'");
  }
  return value;
}

long long parse_integer(std::string_view field, std::string_view what) {
  field = trim(field);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw Error(ErrorCode::format,
                "expected an integer for " + std::string(what) + ", got '" + std::string(field) + "'");
  }
  return value;
}

std::string format_shortest(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), ptr};
}

std::string format_significant(double value, int digits) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*g", digits, value);
  std::string out(buf.data());
  if (out == "-0") out = "0";
  return out;
}

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", decimals, value);
  return buf.data();
}

std::string format_labeled_matrix(const std::vector<std::string>& labels,
                                  const SquareMatrix<double>& values) {
  if (labels.size() != values.size()) {
    throw Error(ErrorCode::shape, "label count does not match matrix size");
  }
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += '\t';
    out += labels[i];
  }
  out += '\n';
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j) out += '\t';
      out += format_shortest(values(i, j));
    }
    out += '\n';
  }
  return out;
}

LabeledMatrix parse_labeled_matrix(std::string_view text) {
  auto rows = lines(text);
  if (rows.empty()) {
    throw Error(ErrorCode::format, "matrix file is empty");
  }
  LabeledMatrix m;
  if (!rows[0].empty()) {
    for (auto label : split(rows[0], '\t')) m.labels.emplace_back(trim(label));
  }
  const auto n = m.labels.size();
  std::size_t data_rows = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (!trim(rows[r]).empty()) ++data_rows;
  }
  if (data_rows != n) {
    throw Error(ErrorCode::format, "declared " + std::to_string(n) + " labels but found " +
                                       std::to_string(data_rows) + " matrix rows");
  }
  m.values = SquareMatrix<double>(n);
  std::size_t i = 0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (trim(rows[r]).empty()) continue;
    auto fields = split(rows[r], '\t');
    if (fields.size() != n) {
      throw Error(ErrorCode::format, "line " + std::to_string(r + 1) + " has " +
                                         std::to_string(fields.size()) + " columns, expected " +
                                         std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      m.values(i, j) = parse_real(fields[j], "matrix cell");
    }
    ++i;
  }
  return m;
}

}  // namespace patfolio::io
