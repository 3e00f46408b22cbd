#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patfolio/ingest.hpp"
#include "patfolio/taxonomy.hpp"

namespace patfolio {

/// Longest set name accepted; the name doubles as a column header.
inline constexpr std::size_t kMaxSetNameLength = 10;

/// Throws Error(invalid_name) unless `name` is 1..10 characters with no
/// whitespace, control characters or path separators.
void validate_set_name(std::string_view name);

enum class CountingMode {
  set,       // each distinct class counts once per patent
  multiset,  // every symbol counts
};

struct CountOptions {
  CountingMode mode = CountingMode::set;
  bool strict = false;  // unknown or malformed symbols are errors
};

/// Classes seen in the data that are not in the class list (lenient mode).
/// Kept out of all diversity and network arithmetic.
struct UnknownBucket {
  std::int64_t count = 0;
  std::map<std::string, std::int64_t> symbols;

  friend bool operator==(const UnknownBucket&, const UnknownBucket&) = default;
};

/// Distribution of one document set over the classes of a ClassList.
struct ClassVector {
  std::string name;
  ClassListPtr classes;
  std::vector<std::int64_t> counts;
  std::int64_t n_patents = 0;  // 0 when reloaded from a matrix store
  UnknownBucket unknown;

  [[nodiscard]] ClassLevel level() const noexcept { return classes->level(); }
  [[nodiscard]] std::size_t size() const noexcept { return counts.size(); }
};

ClassVector make_class_vector(std::string name, ClassListPtr classes,
                              std::vector<std::int64_t> counts);

/// Distinct class keys of one patent at the list's level, in first-seen
/// order. Unknown and malformed symbols go to `unknown` unless strict.
std::vector<std::size_t> patent_classes(const PatentRecord& record, const ClassList& classes,
                                        const CountOptions& options, UnknownBucket* unknown);

ClassVector count_classes(std::span<const PatentRecord> records, std::string name,
                          ClassListPtr classes, const CountOptions& options = {});

/// Class x set count matrix, extended by one column per run.
struct MatrixStore {
  ClassListPtr classes;  // null until the first column arrives
  std::vector<ClassVector> columns;

  [[nodiscard]] bool empty() const noexcept { return columns.empty(); }
  [[nodiscard]] const ClassVector* find(std::string_view name) const;
  [[nodiscard]] std::vector<std::string> names() const;
};

/// Throws name_conflict, level_conflict, or shape (different class list).
MatrixStore append_column(const MatrixStore& store, ClassVector column);

/// Tab-separated: "class" then one header per set; one row per class.
std::string format_matrix_store(const MatrixStore& store);
MatrixStore parse_matrix_store(std::string_view text);

/// Missing file yields an empty store.
MatrixStore load_matrix_store(const std::filesystem::path& path);
void save_matrix_store(const std::filesystem::path& path, const MatrixStore& store);

}  // namespace patfolio
