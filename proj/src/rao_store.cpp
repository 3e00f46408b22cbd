#include "patfolio/rao_store.hpp"

#include <algorithm>

#include "patfolio/error.hpp"
#include "patfolio/io.hpp"

namespace patfolio {
namespace {

constexpr std::string_view kHeader = "name\tn_patents\tvariety\tgini_simpson\trao_delta\ttrue_diversity";

}  // namespace

const DiversityRecord* RaoStore::find(std::string_view name) const {
  auto it = std::find_if(rows.begin(), rows.end(),
                         [name](const DiversityRecord& r) { return r.name == name; });
  return it == rows.end() ? nullptr : &*it;
}

RaoStore append_diversity_row(const RaoStore& store, DiversityRecord row) {
  validate_set_name(row.name);
  if (store.find(row.name)) {
    throw Error(ErrorCode::name_conflict, "set '" + row.name + "' already exists in the rao store");
  }
  RaoStore out = store;
  out.rows.push_back(std::move(row));
  return out;
}

std::string format_rao_store(const RaoStore& store) {
  std::string out(kHeader);
  out += '\n';
  for (const auto& r : store.rows) {
    out += r.name + "\t" + std::to_string(r.n_patents) + "\t" + std::to_string(r.variety) + "\t" +
           io::format_shortest(r.gini_simpson) + "\t" + io::format_shortest(r.rao_delta) + "\t" +
           io::format_shortest(r.true_diversity) + "\n";
  }
  return out;
}

RaoStore parse_rao_store(std::string_view text) {
  const auto rows = io::lines(text);
  RaoStore store;
  if (rows.empty()) return store;
  if (rows[0] != kHeader) throw Error(ErrorCode::format, "unexpected rao store header");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (io::trim(rows[i]).empty()) continue;
    auto f = io::split(rows[i], '\t');
    if (f.size() != 6) {
      throw Error(ErrorCode::format, "rao store line " + std::to_string(i + 1) + " needs 6 fields");
    }
    DiversityRecord r;
    r.name = std::string(io::trim(f[0]));
    r.n_patents = io::parse_integer(f[1], "n_patents");
    r.variety = io::parse_integer(f[2], "variety");
    r.gini_simpson = io::parse_real(f[3], "gini_simpson");
    r.rao_delta = io::parse_real(f[4], "rao_delta");
    r.true_diversity = io::parse_real(f[5], "true_diversity");
    store = append_diversity_row(store, std::move(r));
  }
  return store;
}

RaoStore load_rao_store(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  try {
    return parse_rao_store(io::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void save_rao_store(const std::filesystem::path& path, const RaoStore& store) {
  io::write_file_atomically(path, format_rao_store(store));
}

}  // namespace patfolio
