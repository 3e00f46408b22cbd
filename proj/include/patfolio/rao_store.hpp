#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "patfolio/diversity.hpp"

namespace patfolio {

/// Per-set diversity table, one row appended per run.
struct RaoStore {
  std::vector<DiversityRecord> rows;

  [[nodiscard]] const DiversityRecord* find(std::string_view name) const;
};

/// Error(name_conflict) when the row name is taken.
RaoStore append_diversity_row(const RaoStore& store, DiversityRecord row);

/// Header "name n_patents variety gini_simpson rao_delta true_diversity",
/// tab-separated; reals in shortest round-trip form.
std::string format_rao_store(const RaoStore& store);
RaoStore parse_rao_store(std::string_view text);

RaoStore load_rao_store(const std::filesystem::path& path);
void save_rao_store(const std::filesystem::path& path, const RaoStore& store);

}  // namespace patfolio
