#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace patfolio {

/// Dense row-major square matrix.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  [[nodiscard]] const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

namespace io {

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temp file and renames it over `path`, so readers see
// either the old or the new content.
void write_file_atomically(const std::filesystem::path& path, std::string_view content);

// Splits on `sep`, keeping empty fields.
std::vector<std::string_view> split(std::string_view text, char sep);

// Splits into lines on '\n', dropping a trailing '\r' per line. A final
// newline does not produce an empty trailing line.
std::vector<std::string_view> lines(std::string_view text);

std::string_view trim(std::string_view text);

double parse_real(std::string_view field, std::string_view what);
long long parse_integer(std::string_view field, std::string_view what);

// Shortest representation that parses back to the same double.
std::string format_shortest(double value);
// At most `digits` significant digits, trailing zeros removed.
std::string format_significant(double value, int digits = 6);
// Fixed decimals; exact binary ties round to even.
std::string format_fixed(double value, int decimals);

/// Tab-separated square matrix: one header line of labels, then one line of
/// N values per label in header order.
struct LabeledMatrix {
  std::vector<std::string> labels;
  SquareMatrix<double> values;
};

std::string format_labeled_matrix(const std::vector<std::string>& labels,
                                  const SquareMatrix<double>& values);
LabeledMatrix parse_labeled_matrix(std::string_view text);

}  // namespace io
}  // namespace patfolio
