#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patfolio/ingest.hpp"
#include "patfolio/network.hpp"
#include "patfolio/portfolio.hpp"
#include "patfolio/taxonomy.hpp"

namespace patfolio {

// All writers emit UTF-8 with '\n' line endings and replace the target file
// atomically. Identical inputs give identical bytes.

/// "*Vertices N", one `i "label"` line per node, "*Edges", one "i j w" line
/// per edge (1-based, i < j, w with at most 6 significant digits).
std::string format_pajek_net(const SimilarityGraph& g);
void write_pajek_net(const SimilarityGraph& g, const std::filesystem::path& path);
/// Reads *Vertices / *Edges / *Arcs sections; a missing weight reads as 1.
SimilarityGraph parse_pajek_net(std::string_view text);

/// "*Vertices N" then one value per line. Error(shape) unless
/// values.size() == expected_size.
std::string format_pajek_vec(std::span<const double> values, std::size_t expected_size);
void write_pajek_vec(std::span<const double> values, std::size_t expected_size,
                     const std::filesystem::path& path);
std::vector<double> parse_pajek_vec(std::string_view text);

std::string format_pajek_clu(std::span<const int> clusters, std::size_t expected_size);
void write_pajek_clu(std::span<const int> clusters, std::size_t expected_size,
                     const std::filesystem::path& path);
std::vector<int> parse_pajek_clu(std::string_view text);

struct VosItem {
  int id = 0;
  std::string label;
  double x = 0.0;
  double y = 0.0;
  int cluster = 1;
  double weight = 0.0;
};

struct VosLink {
  int from = 0;
  int to = 0;
  double strength = 0.0;
};

struct VosFiles {
  std::string map;
  std::string network;
};

/// Overlay of a portfolio on the base map: one map row per occupied class
/// (position and cluster from the base map, weight = count) and one network
/// line per pair of occupied classes whose base-map cosine exceeds
/// `min_weight`.
VosFiles format_vosviewer(const ClassVector& portfolio, const ClassSimilarityMap& basemap,
                          double min_weight);
void write_vosviewer(const ClassVector& portfolio, const ClassSimilarityMap& basemap,
                     const std::filesystem::path& map_path, const std::filesystem::path& network_path,
                     double min_weight);

/// A graph without fixed positions, left for VOSviewer to lay out. Map
/// header "id label weight"; `node_weights` may be empty (weight 1).
VosFiles format_vosviewer_graph(const SimilarityGraph& g, std::span<const double> node_weights);

std::vector<VosItem> parse_vosviewer_map(std::string_view text);
std::vector<VosLink> parse_vosviewer_network(std::string_view text);

void write_records(std::span<const PatentRecord> records, const std::filesystem::path& path);

/// Labeled square matrix (co-occurrence counts, distances).
void write_labeled_matrix(const std::vector<std::string>& labels, const SquareMatrix<double>& values,
                          const std::filesystem::path& path);

}  // namespace patfolio
