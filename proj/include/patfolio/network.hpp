#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patfolio/ingest.hpp"
#include "patfolio/io.hpp"
#include "patfolio/portfolio.hpp"
#include "patfolio/taxonomy.hpp"

namespace patfolio {

/// Class co-occurrence counts over the occupied classes of a record set.
struct CooccurrenceMatrix {
  std::vector<std::string> codes;  // occupied classes, canonical order
  SquareMatrix<std::int64_t> w;    // symmetric, zero diagonal
};

/// Checks the matrix invariants; Error(shape) or Error(range) otherwise.
CooccurrenceMatrix make_cooccurrence(std::vector<std::string> codes, SquareMatrix<std::int64_t> w);

/// Each unordered pair of distinct classes on a patent adds 1 to its cell.
/// Nodes are the list's classes found on at least one patent; unknown
/// symbols are left out (or rejected when `strict`).
CooccurrenceMatrix cooccurrence(std::span<const PatentRecord> records, const ClassList& classes,
                                bool strict = false);

SquareMatrix<double> to_real(const SquareMatrix<std::int64_t>& m);

struct WeightedEdge {
  std::size_t u = 0;  // u < v
  std::size_t v = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Undirected weighted graph without self-loops; edges sorted by (u, v).
struct SimilarityGraph {
  std::vector<std::string> labels;
  std::vector<WeightedEdge> edges;

  [[nodiscard]] std::size_t node_count() const noexcept { return labels.size(); }
};

/// Validates and sorts; Error(shape) on self-loops, duplicate pairs or
/// out-of-range endpoints.
SimilarityGraph make_graph(std::vector<std::string> labels, std::vector<WeightedEdge> edges);

/// Cosine between every pair of rows of `m.w` (zero diagonal included in
/// the row vectors). Every pair gets an edge; zero-norm rows give 0.
SimilarityGraph cosine_rows(const CooccurrenceMatrix& m);

/// Raw co-occurrence as a graph with one edge per positive cell.
SimilarityGraph cooccurrence_graph(const CooccurrenceMatrix& m);

/// Keeps edges with weight strictly above `t`; Error(domain) unless
/// 0 <= t <= 1.
SimilarityGraph threshold_graph(const SimilarityGraph& g, double t);

/// Induced subgraph on the largest connected node set. Ties go to the
/// component holding the lowest node index.
SimilarityGraph largest_component(const SimilarityGraph& g);

/// Node count of each connected component, in order of lowest member.
std::vector<std::size_t> component_sizes(const SimilarityGraph& g);

/// Whole-network cohesion measures of the binary graph w > 0. Unset
/// optionals mark measures undefined for the graph's size.
struct CohesionReport {
  std::int64_t nodes = 0;
  std::int64_t edges = 0;
  std::optional<double> avg_degree;
  std::int64_t indeg_h_index = 0;
  std::optional<double> deg_centralization;
  std::optional<double> out_central;
  std::optional<double> in_central;
  std::optional<double> density;
  std::int64_t components = 0;
  std::optional<double> component_ratio;
  std::optional<double> connectedness;
  std::optional<double> fragmentation;
  std::optional<double> closure;
  std::optional<double> avg_distance;
  std::optional<double> sd_distance;
  std::optional<std::int64_t> diameter;
  std::optional<double> breadth;
  std::optional<double> compactness;
};

CohesionReport cohesion_report(const CooccurrenceMatrix& m);

/// Binary-graph measures computed from an adjacency list, for callers that
/// already hold a graph.
CohesionReport cohesion_report(const std::vector<std::vector<std::size_t>>& adjacency);

/// Global transitivity: 3 x triangles / connected triples. Unset when the
/// graph has no connected triple.
std::optional<double> closure(const std::vector<std::vector<std::size_t>>& adjacency);

/// (c - 1) / (n - 1), unset for n < 2.
std::optional<double> component_ratio(std::int64_t components, std::int64_t nodes);
/// avg_degree / (n - 1), unset for n < 2.
std::optional<double> density_from_avg_degree(double avg_degree, std::int64_t nodes);

/// Sixteen lines "<row>\t<label>\t<value>" in the conventional UCInet
/// order; reals to three decimals, "undefined" for unset measures.
std::string format_cohesion_report(const CohesionReport& report);

}  // namespace patfolio
