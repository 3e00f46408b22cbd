#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "patfolio/io.hpp"

namespace patfolio {

enum class ClassLevel { ipc3, ipc4 };

std::string_view to_string(ClassLevel level) noexcept;
std::optional<ClassLevel> parse_class_level(std::string_view text);
// 3 for ipc3, 4 for ipc4.
std::size_t code_length(ClassLevel level) noexcept;

/// Number of four-digit classes in the reference IPC base map.
inline constexpr std::size_t kCanonicalIpc4Count = 630;

/// A four-digit IPC/CPC subclass such as "G06F". Always uppercase and of
/// the form letter-digit-digit-letter.
class Ipc4 {
 public:
  /// Throws Error(invalid_symbol) unless `code` already has the exact form.
  explicit Ipc4(std::string_view code);

  [[nodiscard]] const std::string& str() const noexcept { return code_; }
  [[nodiscard]] char section() const noexcept { return code_[0]; }

  friend bool operator==(const Ipc4&, const Ipc4&) = default;
  friend auto operator<=>(const Ipc4&, const Ipc4&) = default;

 private:
  std::string code_;
};

/// Ordered list of class codes at one level; the order is the canonical
/// order for every vector indexed by class.
class ClassList {
 public:
  ClassList() = default;
  /// Codes must be unique and all of the same length (3 or 4).
  explicit ClassList(std::vector<std::string> codes);

  [[nodiscard]] std::size_t size() const noexcept { return codes_.size(); }
  [[nodiscard]] const std::vector<std::string>& codes() const noexcept { return codes_; }
  [[nodiscard]] const std::string& operator[](std::size_t i) const { return codes_[i]; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view code) const;
  [[nodiscard]] bool contains(std::string_view code) const { return index_of(code).has_value(); }
  /// Empty lists report ipc4.
  [[nodiscard]] ClassLevel level() const noexcept { return level_; }

  friend bool operator==(const ClassList& a, const ClassList& b) { return a.codes_ == b.codes_; }

 private:
  std::vector<std::string> codes_;
  std::unordered_map<std::string, std::size_t> index_;
  ClassLevel level_ = ClassLevel::ipc4;
};

using ClassListPtr = std::shared_ptr<const ClassList>;

/// Uppercases, drops whitespace and keeps the first four characters, which
/// must read letter-digit-digit-letter. With a class list given (strict
/// mode) the code must also be listed, else Error(unknown_class).
Ipc4 normalize_class(std::string_view raw, const ClassList* strict_list = nullptr);

/// "G06F" -> "G06".
std::string truncate3(const Ipc4& code);

/// Code of `code` at `level`.
std::string class_key(const Ipc4& code, ClassLevel level);

struct MapPosition {
  double x = 0.0;
  double y = 0.0;
  int cluster = 1;

  friend bool operator==(const MapPosition&, const MapPosition&) = default;
};

/// Base map: symmetric cosine similarities among the canonical classes plus
/// each class's layout position and cluster. Immutable once built.
class ClassSimilarityMap {
 public:
  /// Uses the upper triangle (diagonal included) of `cosines` and mirrors
  /// it. Values outside [0,1] by more than 1e-9 raise Error(range); smaller
  /// excursions are clamped.
  ClassSimilarityMap(ClassList classes, const SquareMatrix<double>& cosines,
                     std::vector<MapPosition> layout = {});

  [[nodiscard]] const ClassListPtr& classes() const noexcept { return classes_; }
  [[nodiscard]] std::size_t size() const noexcept { return classes_->size(); }
  [[nodiscard]] ClassLevel level() const noexcept { return classes_->level(); }
  [[nodiscard]] double cosine(std::size_t i, std::size_t j) const { return values_(i, j); }
  [[nodiscard]] const SquareMatrix<double>& values() const noexcept { return values_; }
  [[nodiscard]] bool has_layout() const noexcept { return !layout_.empty(); }
  [[nodiscard]] const std::vector<MapPosition>& layout() const noexcept { return layout_; }

 private:
  ClassListPtr classes_;
  SquareMatrix<double> values_;
  std::vector<MapPosition> layout_;
};

/// Reads the tab-separated matrix file (header of codes, then N rows of N
/// cosines) and, optionally, the layout file ("code x y cluster" per line,
/// any order, every class exactly once).
ClassSimilarityMap load_basemap(const std::filesystem::path& matrix_path,
                                const std::optional<std::filesystem::path>& layout_path = std::nullopt);

ClassSimilarityMap parse_basemap(std::string_view matrix_text,
                                 std::optional<std::string_view> layout_text = std::nullopt);

std::string format_basemap_matrix(const ClassSimilarityMap& map);
std::string format_basemap_layout(const ClassSimilarityMap& map);

}  // namespace patfolio
