#include "patfolio/export.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "patfolio/error.hpp"
#include "patfolio/io.hpp"

namespace patfolio {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Splits a Pajek line on whitespace, keeping "quoted labels" whole.
std::vector<std::string> pajek_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    if (line[i] == '"') {
      auto close = line.find('"', i + 1);
      if (close == std::string_view::npos) throw Error(ErrorCode::format, "unterminated Pajek label");
      out.emplace_back(line.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      auto start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      out.emplace_back(line.substr(start, i - start));
    }
  }
  return out;
}

std::size_t vertices_header(std::string_view line) {
  auto tokens = pajek_tokens(line);
  if (tokens.size() < 2 || lower(tokens[0]) != "*vertices") {
    throw Error(ErrorCode::format, "expected '*Vertices N'");
  }
  const auto n = io::parse_integer(tokens[1], "vertex count");
  if (n < 0) throw Error(ErrorCode::format, "negative vertex count");
  return static_cast<std::size_t>(n);
}

// Body lines after "*Vertices N" for .vec/.clu files.
std::vector<std::string_view> partition_body(std::string_view text, std::size_t* declared) {
  auto all = io::lines(text);
  std::vector<std::string_view> body;
  bool header_seen = false;
  for (auto line : all) {
    auto t = io::trim(line);
    if (t.empty() || t.front() == '%') continue;
    if (!header_seen) {
      *declared = vertices_header(t);
      header_seen = true;
      continue;
    }
    body.push_back(t);
  }
  if (!header_seen) throw Error(ErrorCode::format, "missing '*Vertices' line");
  if (body.size() != *declared) {
    throw Error(ErrorCode::format, "declared " + std::to_string(*declared) + " vertices, found " +
                                       std::to_string(body.size()) + " values");
  }
  return body;
}

void require_size(std::size_t actual, std::size_t expected) {
  if (actual != expected) {
    throw Error(ErrorCode::shape, "got " + std::to_string(actual) + " values for " +
                                      std::to_string(expected) + " classes");
  }
}

}  // namespace

std::string format_pajek_net(const SimilarityGraph& g) {
  std::string out = "*Vertices " + std::to_string(g.node_count()) + "\n";
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.labels[i].find_first_of("\"\n") != std::string::npos) {
      throw Error(ErrorCode::format, "label '" + g.labels[i] + "' cannot be written to Pajek");
    }
    out += std::to_string(i + 1) + " \"" + g.labels[i] + "\"\n";
  }
  out += "*Edges\n";
  for (const auto& e : g.edges) {
    out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " +
           io::format_significant(e.weight, 6) + "\n";
  }
  return out;
}

void write_pajek_net(const SimilarityGraph& g, const std::filesystem::path& path) {
  io::write_file_atomically(path, format_pajek_net(g));
}

SimilarityGraph parse_pajek_net(std::string_view text) {
  enum class Section { none, vertices, edges } section = Section::none;
  std::vector<std::string> labels;
  std::vector<WeightedEdge> edges;
  std::size_t declared = 0;
  std::size_t line_no = 0;
  for (auto raw : io::lines(text)) {
    ++line_no;
    auto line = io::trim(raw);
    if (line.empty() || line.front() == '%') continue;
    if (line.front() == '*') {
      const auto keyword = lower(pajek_tokens(line).front());
      if (keyword == "*vertices") {
        declared = vertices_header(line);
        labels.resize(declared);
        for (std::size_t i = 0; i < declared; ++i) labels[i] = std::to_string(i + 1);
        section = Section::vertices;
      } else if (keyword == "*edges" || keyword == "*arcs") {
        section = Section::edges;
      } else {
        throw Error(ErrorCode::format, "line " + std::to_string(line_no) + ": unsupported section " + keyword);
      }
      continue;
    }
    auto tokens = pajek_tokens(line);
    if (section == Section::vertices) {
      const auto id = io::parse_integer(tokens[0], "vertex id");
      if (id < 1 || static_cast<std::size_t>(id) > declared) {
        throw Error(ErrorCode::format, "line " + std::to_string(line_no) + ": vertex id out of range");
      }
      if (tokens.size() >= 2) labels[static_cast<std::size_t>(id - 1)] = tokens[1];
    } else if (section == Section::edges) {
      if (tokens.size() < 2) throw Error(ErrorCode::format, "line " + std::to_string(line_no) + ": short edge line");
      const auto u = io::parse_integer(tokens[0], "edge source");
      const auto v = io::parse_integer(tokens[1], "edge target");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > declared || static_cast<std::size_t>(v) > declared) {
        throw Error(ErrorCode::format, "line " + std::to_string(line_no) + ": edge endpoint out of range");
      }
      const double w = tokens.size() >= 3 ? io::parse_real(tokens[2], "edge weight") : 1.0;
      edges.push_back({static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1), w});
    } else {
      throw Error(ErrorCode::format, "line " + std::to_string(line_no) + ": data before '*Vertices'");
    }
  }
  return make_graph(std::move(labels), std::move(edges));
}

std::string format_pajek_vec(std::span<const double> values, std::size_t expected_size) {
  require_size(values.size(), expected_size);
  std::string out = "*Vertices " + std::to_string(values.size()) + "\n";
  for (double v : values) out += io::format_shortest(v) + "\n";
  return out;
}

void write_pajek_vec(std::span<const double> values, std::size_t expected_size,
                     const std::filesystem::path& path) {
  io::write_file_atomically(path, format_pajek_vec(values, expected_size));
}

std::vector<double> parse_pajek_vec(std::string_view text) {
  std::size_t n = 0;
  std::vector<double> out;
  for (auto line : partition_body(text, &n)) out.push_back(io::parse_real(line, "vector value"));
  return out;
}

std::string format_pajek_clu(std::span<const int> clusters, std::size_t expected_size) {
  require_size(clusters.size(), expected_size);
  std::string out = "*Vertices " + std::to_string(clusters.size()) + "\n";
  for (int c : clusters) out += std::to_string(c) + "\n";
  return out;
}

void write_pajek_clu(std::span<const int> clusters, std::size_t expected_size,
                     const std::filesystem::path& path) {
  io::write_file_atomically(path, format_pajek_clu(clusters, expected_size));
}

std::vector<int> parse_pajek_clu(std::string_view text) {
  std::size_t n = 0;
  std::vector<int> out;
  for (auto line : partition_body(text, &n)) {
    out.push_back(static_cast<int>(io::parse_integer(line, "cluster")));
  }
  return out;
}

VosFiles format_vosviewer(const ClassVector& portfolio, const ClassSimilarityMap& basemap,
                          double min_weight) {
  if (!portfolio.classes) throw Error(ErrorCode::shape, "portfolio has no class list");
  if (portfolio.level() != basemap.level()) {
    throw Error(ErrorCode::level_conflict, "portfolio is " + std::string(to_string(portfolio.level())) +
                                               ", base map is " + std::string(to_string(basemap.level())));
  }
  if (!basemap.has_layout()) throw Error(ErrorCode::format, "base map has no layout positions");

  std::vector<std::size_t> map_index;
  std::vector<std::int64_t> weights;
  for (std::size_t i = 0; i < portfolio.counts.size(); ++i) {
    if (portfolio.counts[i] <= 0) continue;
    const auto& code = (*portfolio.classes)[i];
    auto idx = basemap.classes()->index_of(code);
    if (!idx) throw Error(ErrorCode::unknown_class, "class '" + code + "' is not on the base map");
    map_index.push_back(*idx);
    weights.push_back(portfolio.counts[i]);
  }

  VosFiles files;
  files.map = "id\tlabel\tx\ty\tcluster\tweight\n";
  for (std::size_t k = 0; k < map_index.size(); ++k) {
    const auto& pos = basemap.layout()[map_index[k]];
    files.map += std::to_string(k + 1) + "\t" + (*basemap.classes())[map_index[k]] + "\t" +
                 io::format_shortest(pos.x) + "\t" + io::format_shortest(pos.y) + "\t" +
                 std::to_string(pos.cluster) + "\t" + std::to_string(weights[k]) + "\n";
  }
  for (std::size_t a = 0; a < map_index.size(); ++a) {
    for (std::size_t b = a + 1; b < map_index.size(); ++b) {
      const double cos = basemap.cosine(map_index[a], map_index[b]);
      if (cos > min_weight) {
        files.network += std::to_string(a + 1) + "\t" + std::to_string(b + 1) + "\t" +
                         io::format_significant(cos, 6) + "\n";
      }
    }
  }
  return files;
}

void write_vosviewer(const ClassVector& portfolio, const ClassSimilarityMap& basemap,
                     const std::filesystem::path& map_path, const std::filesystem::path& network_path,
                     double min_weight) {
  const auto files = format_vosviewer(portfolio, basemap, min_weight);
  io::write_file_atomically(map_path, files.map);
  io::write_file_atomically(network_path, files.network);
}

VosFiles format_vosviewer_graph(const SimilarityGraph& g, std::span<const double> node_weights) {
  if (!node_weights.empty()) require_size(node_weights.size(), g.node_count());
  VosFiles files;
  files.map = "id\tlabel\tweight\n";
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.labels[i].find_first_of("\t\n") != std::string::npos) {
      throw Error(ErrorCode::format, "label '" + g.labels[i] + "' cannot be written to VOSviewer");
    }
    const double w = node_weights.empty() ? 1.0 : node_weights[i];
    files.map += std::to_string(i + 1) + "\t" + g.labels[i] + "\t" + io::format_shortest(w) + "\n";
  }
  for (const auto& e : g.edges) {
    files.network += std::to_string(e.u + 1) + "\t" + std::to_string(e.v + 1) + "\t" +
                     io::format_significant(e.weight, 6) + "\n";
  }
  return files;
}

std::vector<VosItem> parse_vosviewer_map(std::string_view text) {
  const auto rows = io::lines(text);
  std::vector<VosItem> items;
  if (rows.empty()) return items;
  auto header = io::split(rows[0], '\t');
  auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (io::trim(header[i]) == name) return i;
    }
    return std::nullopt;
  };
  const auto id_col = column("id");
  const auto label_col = column("label");
  if (!id_col || !label_col) throw Error(ErrorCode::format, "VOSviewer map needs id and label columns");
  const auto x_col = column("x"), y_col = column("y"), cluster_col = column("cluster"),
             weight_col = column("weight");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (io::trim(rows[r]).empty()) continue;
    auto f = io::split(rows[r], '\t');
    if (f.size() != header.size()) {
      throw Error(ErrorCode::format, "VOSviewer map line " + std::to_string(r + 1) + " has a wrong field count");
    }
    VosItem item;
    item.id = static_cast<int>(io::parse_integer(f[*id_col], "id"));
    item.label = std::string(f[*label_col]);
    if (x_col) item.x = io::parse_real(f[*x_col], "x");
    if (y_col) item.y = io::parse_real(f[*y_col], "y");
    if (cluster_col) item.cluster = static_cast<int>(io::parse_integer(f[*cluster_col], "cluster"));
    if (weight_col) item.weight = io::parse_real(f[*weight_col], "weight");
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<VosLink> parse_vosviewer_network(std::string_view text) {
  std::vector<VosLink> links;
  std::size_t line_no = 0;
  for (auto line : io::lines(text)) {
    ++line_no;
    if (io::trim(line).empty()) continue;
    auto f = io::split(line, '\t');
    if (f.size() != 3) {
      throw Error(ErrorCode::format, "VOSviewer network line " + std::to_string(line_no) + " needs 3 fields");
    }
    links.push_back({static_cast<int>(io::parse_integer(f[0], "id")),
                     static_cast<int>(io::parse_integer(f[1], "id")), io::parse_real(f[2], "strength")});
  }
  return links;
}

void write_records(std::span<const PatentRecord> records, const std::filesystem::path& path) {
  io::write_file_atomically(path, format_records(records));
}

void write_labeled_matrix(const std::vector<std::string>& labels, const SquareMatrix<double>& values,
                          const std::filesystem::path& path) {
  io::write_file_atomically(path, io::format_labeled_matrix(labels, values));
}

}  // namespace patfolio
