#include "patfolio/portfolio.hpp"

#include <algorithm>
#include <unordered_set>

#include "patfolio/error.hpp"
#include "patfolio/io.hpp"

namespace patfolio {
namespace {

std::size_t utf8_length(std::string_view text) {
  return static_cast<std::size_t>(std::count_if(
      text.begin(), text.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

}  // namespace

void validate_set_name(std::string_view name) {
  const auto quoted = "'" + std::string(name) + "'";
  if (name.empty()) throw Error(ErrorCode::invalid_name, "set name is empty");
  if (utf8_length(name) > kMaxSetNameLength) {
    throw Error(ErrorCode::invalid_name, "set name " + quoted + " is longer than 10 characters");
  }
  for (char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u == 0x7F || c == '/' || c == '\\') {
      throw Error(ErrorCode::invalid_name,
                  "set name " + quoted + " contains whitespace, control or path characters");
    }
  }
  if (name == "." || name == "..") throw Error(ErrorCode::invalid_name, "set name " + quoted + " is reserved");
}

ClassVector make_class_vector(std::string name, ClassListPtr classes,
                              std::vector<std::int64_t> counts) {
  validate_set_name(name);
  if (!classes) throw Error(ErrorCode::shape, "class vector without a class list");
  if (counts.size() != classes->size()) {
    throw Error(ErrorCode::shape, "class vector '" + name + "' has " + std::to_string(counts.size()) +
                                      " counts for " + std::to_string(classes->size()) + " classes");
  }
  if (std::any_of(counts.begin(), counts.end(), [](auto c) { return c < 0; })) {
    throw Error(ErrorCode::range, "class vector '" + name + "' has a negative count");
  }
  ClassVector v;
  v.name = std::move(name);
  v.classes = std::move(classes);
  v.counts = std::move(counts);
  return v;
}

std::vector<std::size_t> patent_classes(const PatentRecord& record, const ClassList& classes,
                                        const CountOptions& options, UnknownBucket* unknown) {
  const bool distinct = options.mode == CountingMode::set;
  std::vector<std::size_t> out;
  std::unordered_set<std::string> unknown_seen;
  for (const auto& raw : record.class_symbols) {
    std::string key;
    try {
      const auto code = normalize_class(raw, options.strict ? &classes : nullptr);
      key = class_key(code, classes.level());
    } catch (const Error& e) {
      if (options.strict) {
        throw Error(e.code(), "patent " + record.patent_id + ": " + e.what());
      }
      key = std::string(io::trim(raw));
    }
    if (auto idx = classes.index_of(key)) {
      if (!distinct || std::find(out.begin(), out.end(), *idx) == out.end()) out.push_back(*idx);
    } else if (unknown && (!distinct || unknown_seen.insert(key).second)) {
      ++unknown->count;
      ++unknown->symbols[key];
    }
  }
  return out;
}

ClassVector count_classes(std::span<const PatentRecord> records, std::string name,
                          ClassListPtr classes, const CountOptions& options) {
  auto v = make_class_vector(std::move(name), classes,
                             std::vector<std::int64_t>(classes ? classes->size() : 0, 0));
  for (const auto& rec : records) {
    for (auto idx : patent_classes(rec, *v.classes, options, &v.unknown)) ++v.counts[idx];
  }
  v.n_patents = static_cast<std::int64_t>(records.size());
  return v;
}

const ClassVector* MatrixStore::find(std::string_view name) const {
  auto it = std::find_if(columns.begin(), columns.end(),
                         [name](const ClassVector& c) { return c.name == name; });
  return it == columns.end() ? nullptr : &*it;
}

std::vector<std::string> MatrixStore::names() const {
  std::vector<std::string> out;
  for (const auto& c : columns) out.push_back(c.name);
  return out;
}

MatrixStore append_column(const MatrixStore& store, ClassVector column) {
  validate_set_name(column.name);
  if (!column.classes || column.counts.size() != column.classes->size()) {
    throw Error(ErrorCode::shape, "column '" + column.name + "' is not aligned to a class list");
  }
  if (store.find(column.name)) {
    throw Error(ErrorCode::name_conflict, "set '" + column.name + "' already exists in the matrix store");
  }
  MatrixStore out = store;
  if (store.classes) {
    if (store.classes->level() != column.level()) {
      throw Error(ErrorCode::level_conflict,
                  "matrix store holds " + std::string(to_string(store.classes->level())) +
                      " columns, '" + column.name + "' is " + std::string(to_string(column.level())));
    }
    if (!(*store.classes == *column.classes)) {
      throw Error(ErrorCode::shape, "column '" + column.name + "' uses a different class list than the store");
    }
    column.classes = store.classes;
  } else {
    out.classes = column.classes;
  }
  out.columns.push_back(std::move(column));
  return out;
}

std::string format_matrix_store(const MatrixStore& store) {
  std::string out = "class";
  for (const auto& c : store.columns) out += "\t" + c.name;
  out += '\n';
  if (!store.classes) return out;
  for (std::size_t i = 0; i < store.classes->size(); ++i) {
    out += (*store.classes)[i];
    for (const auto& c : store.columns) out += "\t" + std::to_string(c.counts[i]);
    out += '\n';
  }
  return out;
}

MatrixStore parse_matrix_store(std::string_view text) {
  const auto rows = io::lines(text);
  MatrixStore store;
  if (rows.empty()) return store;
  auto header = io::split(rows[0], '\t');
  if (io::trim(header[0]) != "class") {
    throw Error(ErrorCode::format, "matrix store header must start with 'class'");
  }
  std::vector<std::string> codes;
  std::vector<std::vector<std::int64_t>> counts(header.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (io::trim(rows[r]).empty()) continue;
    auto fields = io::split(rows[r], '\t');
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::format, "matrix store line " + std::to_string(r + 1) + " has " +
                                         std::to_string(fields.size()) + " fields, expected " +
                                         std::to_string(header.size()));
    }
    codes.emplace_back(io::trim(fields[0]));
    for (std::size_t c = 1; c < fields.size(); ++c) {
      counts[c - 1].push_back(io::parse_integer(fields[c], "class count"));
    }
  }
  if (codes.empty()) return store;
  auto classes = std::make_shared<const ClassList>(std::move(codes));
  for (std::size_t c = 1; c < header.size(); ++c) {
    store = append_column(store, make_class_vector(std::string(io::trim(header[c])), classes,
                                                   std::move(counts[c - 1])));
  }
  store.classes = classes;
  return store;
}

MatrixStore load_matrix_store(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  try {
    return parse_matrix_store(io::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void save_matrix_store(const std::filesystem::path& path, const MatrixStore& store) {
  io::write_file_atomically(path, format_matrix_store(store));
}

}  // namespace patfolio
