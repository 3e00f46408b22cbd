#include "patfolio/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "patfolio/error.hpp"

namespace patfolio {
namespace {

bool is_upper_letter(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool has_ipc_shape(std::string_view code, std::size_t length) {
  if (code.size() != length) return false;
  if (!is_upper_letter(code[0]) || !is_digit(code[1]) || !is_digit(code[2])) return false;
  return length == 3 || is_upper_letter(code[3]);
}

constexpr double kRangeSlack = 1e-9;

}  // namespace

std::string_view to_string(ClassLevel level) noexcept {
  return level == ClassLevel::ipc3 ? "ipc3" : "ipc4";
}

std::optional<ClassLevel> parse_class_level(std::string_view text) {
  if (text == "ipc3" || text == "3") return ClassLevel::ipc3;
  if (text == "ipc4" || text == "4") return ClassLevel::ipc4;
  return std::nullopt;
}

std::size_t code_length(ClassLevel level) noexcept { return level == ClassLevel::ipc3 ? 3 : 4; }

Ipc4::Ipc4(std::string_view code) : code_(code) {
  if (!has_ipc_shape(code_, 4)) {
    throw Error(ErrorCode::invalid_symbol, "'" + code_ + "' is not a four-digit IPC/CPC class");
  }
}

ClassList::ClassList(std::vector<std::string> codes) : codes_(std::move(codes)) {
  if (!codes_.empty()) {
    const auto len = codes_.front().size();
    if (len != 3 && len != 4) {
      throw Error(ErrorCode::format, "class codes must have 3 or 4 characters: '" + codes_.front() + "'");
    }
    level_ = len == 3 ? ClassLevel::ipc3 : ClassLevel::ipc4;
  }
  index_.reserve(codes_.size());
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (!has_ipc_shape(codes_[i], code_length(level_))) {
      throw Error(ErrorCode::format, "malformed class code '" + codes_[i] + "'");
    }
    if (!index_.emplace(codes_[i], i).second) {
      throw Error(ErrorCode::format, "duplicate class code '" + codes_[i] + "'");
    }
  }
}

std::optional<std::size_t> ClassList::index_of(std::string_view code) const {
  auto it = index_.find(std::string(code));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Ipc4 normalize_class(std::string_view raw, const ClassList* strict_list) {
  std::string compact;
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    compact += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (compact.size() == 4) break;
  }
  if (!has_ipc_shape(compact, 4)) {
    throw Error(ErrorCode::invalid_symbol, "'" + std::string(raw) + "' is not an IPC/CPC symbol");
  }
  Ipc4 code(compact);
  if (strict_list) {
    const auto key = class_key(code, strict_list->level());
    if (!strict_list->contains(key)) {
      throw Error(ErrorCode::unknown_class,
                  "class '" + key + "' (from '" + std::string(raw) + "') is not in the class list");
    }
  }
  return code;
}

std::string truncate3(const Ipc4& code) { return code.str().substr(0, 3); }

std::string class_key(const Ipc4& code, ClassLevel level) {
  return level == ClassLevel::ipc3 ? truncate3(code) : code.str();
}

ClassSimilarityMap::ClassSimilarityMap(ClassList classes, const SquareMatrix<double>& cosines,
                                       std::vector<MapPosition> layout)
    : classes_(std::make_shared<const ClassList>(std::move(classes))),
      values_(cosines.size()),
      layout_(std::move(layout)) {
  const auto n = classes_->size();
  if (cosines.size() != n) {
    throw Error(ErrorCode::format, "similarity matrix is " + std::to_string(cosines.size()) +
                                       "x" + std::to_string(cosines.size()) + " for " +
                                       std::to_string(n) + " classes");
  }
  if (!layout_.empty() && layout_.size() != n) {
    throw Error(ErrorCode::format, "layout covers " + std::to_string(layout_.size()) + " of " +
                                       std::to_string(n) + " classes");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double v = cosines(i, j);
      if (!(v >= -kRangeSlack && v <= 1.0 + kRangeSlack)) {
        throw Error(ErrorCode::range, "cosine " + io::format_shortest(v) + " between " +
                                          (*classes_)[i] + " and " + (*classes_)[j] +
                                          " is outside [0,1]");
      }
      v = std::clamp(v, 0.0, 1.0);
      values_(i, j) = v;
      values_(j, i) = v;
    }
  }
}

ClassSimilarityMap parse_basemap(std::string_view matrix_text,
                                 std::optional<std::string_view> layout_text) {
  auto matrix = io::parse_labeled_matrix(matrix_text);
  ClassList classes(std::move(matrix.labels));
  std::vector<MapPosition> layout;
  if (layout_text) {
    layout.resize(classes.size());
    std::vector<bool> seen(classes.size(), false);
    std::size_t line_no = 0;
    for (auto line : io::lines(*layout_text)) {
      ++line_no;
      if (io::trim(line).empty()) continue;
      auto fields = io::split(line, '\t');
      if (fields.size() != 4) {
        throw Error(ErrorCode::format, "layout line " + std::to_string(line_no) +
                                           ": expected code, x, y, cluster");
      }
      const auto code = io::trim(fields[0]);
      if (line_no == 1 && code == "code") continue;
      auto idx = classes.index_of(code);
      if (!idx) {
        throw Error(ErrorCode::format, "layout names class '" + std::string(code) +
                                           "' absent from the matrix header");
      }
      if (seen[*idx]) {
        throw Error(ErrorCode::format, "layout lists class '" + std::string(code) + "' twice");
      }
      seen[*idx] = true;
      const auto cluster = io::parse_integer(fields[3], "cluster");
      if (cluster < 1) {
        throw Error(ErrorCode::range, "cluster of '" + std::string(code) + "' must be positive");
      }
      layout[*idx] = {io::parse_real(fields[1], "x"), io::parse_real(fields[2], "y"),
                      static_cast<int>(cluster)};
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) {
        throw Error(ErrorCode::format, "layout has no entry for class '" + classes[i] + "'");
      }
    }
  }
  return ClassSimilarityMap(std::move(classes), matrix.values, std::move(layout));
}

ClassSimilarityMap load_basemap(const std::filesystem::path& matrix_path,
                                const std::optional<std::filesystem::path>& layout_path) {
  const auto matrix_text = io::read_file(matrix_path);
  try {
    if (layout_path) {
      const auto layout_text = io::read_file(*layout_path);
      return parse_basemap(matrix_text, std::string_view(layout_text));
    }
    return parse_basemap(matrix_text);
  } catch (const Error& e) {
    throw Error(e.code(), matrix_path.string() + ": " + e.what());
  }
}

std::string format_basemap_matrix(const ClassSimilarityMap& map) {
  return io::format_labeled_matrix(map.classes()->codes(), map.values());
}

std::string format_basemap_layout(const ClassSimilarityMap& map) {
  std::string out;
  for (std::size_t i = 0; i < map.layout().size(); ++i) {
    const auto& pos = map.layout()[i];
    out += (*map.classes())[i] + "\t" + io::format_shortest(pos.x) + "\t" +
           io::format_shortest(pos.y) + "\t" + std::to_string(pos.cluster) + "\n";
  }
  return out;
}

}  // namespace patfolio
