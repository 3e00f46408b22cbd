#include "patfolio/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

#include "patfolio/compensated_sum.hpp"
#include "patfolio/error.hpp"

namespace patfolio {
namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

Adjacency binary_adjacency(const CooccurrenceMatrix& m) {
  const auto n = m.codes.size();
  Adjacency adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m.w(i, j) > 0) adj[i].push_back(j);
    }
  }
  return adj;
}

Adjacency graph_adjacency(const SimilarityGraph& g) {
  Adjacency adj(g.node_count());
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Component id per node, ids numbered by lowest member.
std::vector<std::size_t> label_components(const Adjacency& adj, std::size_t* count) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(adj.size(), kUnset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto v : adj[u]) {
        if (comp[v] == kUnset) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  *count = next;
  return comp;
}

std::string fixed3(double v) { return io::format_fixed(v, 3); }

}  // namespace

CooccurrenceMatrix make_cooccurrence(std::vector<std::string> codes, SquareMatrix<std::int64_t> w) {
  if (w.size() != codes.size()) throw Error(ErrorCode::shape, "co-occurrence matrix does not match its codes");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w(i, i) != 0) throw Error(ErrorCode::shape, "co-occurrence diagonal must be zero");
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w(i, j) != w(j, i)) throw Error(ErrorCode::shape, "co-occurrence matrix is not symmetric");
      if (w(i, j) < 0) throw Error(ErrorCode::range, "negative co-occurrence count");
    }
  }
  return {std::move(codes), std::move(w)};
}

CooccurrenceMatrix cooccurrence(std::span<const PatentRecord> records, const ClassList& classes,
                                bool strict) {
  const CountOptions options{CountingMode::set, strict};
  std::vector<std::vector<std::size_t>> per_patent;
  per_patent.reserve(records.size());
  std::vector<bool> occupied(classes.size(), false);
  for (const auto& rec : records) {
    auto idx = patent_classes(rec, classes, options, nullptr);
    for (auto i : idx) occupied[i] = true;
    per_patent.push_back(std::move(idx));
  }
  std::vector<std::size_t> node_of(classes.size(), 0);
  std::vector<std::string> codes;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (occupied[i]) {
      node_of[i] = codes.size();
      codes.push_back(classes[i]);
    }
  }
  SquareMatrix<std::int64_t> w(codes.size(), 0);
  for (const auto& idx : per_patent) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const auto i = node_of[idx[a]];
        const auto j = node_of[idx[b]];
        ++w(i, j);
        ++w(j, i);
      }
    }
  }
  return {std::move(codes), std::move(w)};
}

SquareMatrix<double> to_real(const SquareMatrix<std::int64_t>& m) {
  SquareMatrix<double> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = static_cast<double>(m(i, j));
  }
  return out;
}

SimilarityGraph make_graph(std::vector<std::string> labels, std::vector<WeightedEdge> edges) {
  for (auto& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::shape, "self-loop on node " + std::to_string(e.u + 1));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= labels.size()) throw Error(ErrorCode::shape, "edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw Error(ErrorCode::shape, "duplicate edge " + std::to_string(edges[i].u + 1) + "-" +
                                        std::to_string(edges[i].v + 1));
    }
  }
  return {std::move(labels), std::move(edges)};
}

SimilarityGraph cosine_rows(const CooccurrenceMatrix& m) {
  const auto n = m.codes.size();
  std::vector<double> squared(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    CompensatedSum sq;
    for (std::size_t k = 0; k < n; ++k) {
      const auto x = static_cast<double>(m.w(i, k));
      sq += x * x;
    }
    squared[i] = sq.value();
  }
  SimilarityGraph g{m.codes, {}};
  g.edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double weight = 0.0;
      if (squared[i] > 0.0 && squared[j] > 0.0) {
        CompensatedSum dot;
        for (std::size_t k = 0; k < n; ++k) {
          dot += static_cast<double>(m.w(i, k)) * static_cast<double>(m.w(j, k));
        }
        weight = std::clamp(dot.value() / std::sqrt(squared[i] * squared[j]), 0.0, 1.0);
      }
      g.edges.push_back({i, j, weight});
    }
  }
  return g;
}

SimilarityGraph cooccurrence_graph(const CooccurrenceMatrix& m) {
  SimilarityGraph g{m.codes, {}};
  for (std::size_t i = 0; i < m.codes.size(); ++i) {
    for (std::size_t j = i + 1; j < m.codes.size(); ++j) {
      if (m.w(i, j) > 0) g.edges.push_back({i, j, static_cast<double>(m.w(i, j))});
    }
  }
  return g;
}

SimilarityGraph threshold_graph(const SimilarityGraph& g, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::domain, "threshold must lie in [0,1], got " + io::format_shortest(t));
  }
  SimilarityGraph out{g.labels, {}};
  std::copy_if(g.edges.begin(), g.edges.end(), std::back_inserter(out.edges),
               [t](const WeightedEdge& e) { return e.weight > t; });
  return out;
}

std::vector<std::size_t> component_sizes(const SimilarityGraph& g) {
  std::size_t count = 0;
  const auto comp = label_components(graph_adjacency(g), &count);
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  return sizes;
}

SimilarityGraph largest_component(const SimilarityGraph& g) {
  if (g.node_count() == 0) return g;
  std::size_t count = 0;
  const auto comp = label_components(graph_adjacency(g), &count);
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  // Component ids follow the lowest member, so the first maximum wins ties.
  const auto best = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  std::vector<std::size_t> new_index(g.node_count(), 0);
  SimilarityGraph out;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (comp[i] == best) {
      new_index[i] = out.labels.size();
      out.labels.push_back(g.labels[i]);
    }
  }
  for (const auto& e : g.edges) {
    if (comp[e.u] == best) out.edges.push_back({new_index[e.u], new_index[e.v], e.weight});
  }
  return out;
}

std::optional<double> component_ratio(std::int64_t components, std::int64_t nodes) {
  if (nodes < 2) return std::nullopt;
  return static_cast<double>(components - 1) / static_cast<double>(nodes - 1);
}

std::optional<double> density_from_avg_degree(double avg_degree, std::int64_t nodes) {
  if (nodes < 2) return std::nullopt;
  return avg_degree / static_cast<double>(nodes - 1);
}

std::optional<double> closure(const Adjacency& adjacency) {
  std::vector<std::vector<bool>> linked(adjacency.size(), std::vector<bool>(adjacency.size(), false));
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    for (auto v : adjacency[u]) linked[u][v] = true;
  }
  std::int64_t triangles = 0;
  std::int64_t triples = 0;
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    const auto d = static_cast<std::int64_t>(adjacency[u].size());
    triples += d * (d - 1) / 2;
    for (auto v : adjacency[u]) {
      if (v <= u) continue;
      for (auto w : adjacency[v]) {
        if (w > v && linked[u][w]) ++triangles;
      }
    }
  }
  if (triples == 0) return std::nullopt;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

CohesionReport cohesion_report(const Adjacency& adj) {
  CohesionReport r;
  const auto n = static_cast<std::int64_t>(adj.size());
  r.nodes = n;
  std::int64_t degree_sum = 0;
  std::vector<std::int64_t> degree(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) {
    degree[i] = static_cast<std::int64_t>(adj[i].size());
    degree_sum += degree[i];
  }
  r.edges = degree_sum / 2;

  if (n >= 2) {
    // Derive average degree from density so density * (n - 1) reproduces it.
    r.density = static_cast<double>(degree_sum) / static_cast<double>(n * (n - 1));
    r.avg_degree = *r.density * static_cast<double>(n - 1);
  } else if (n == 1) {
    r.avg_degree = 0.0;
  }

  auto sorted = degree;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  while (r.indeg_h_index < n && sorted[static_cast<std::size_t>(r.indeg_h_index)] >= r.indeg_h_index + 1) {
    ++r.indeg_h_index;
  }

  if (n >= 3) {
    const auto dmax = sorted.front();
    std::int64_t spread = 0;
    for (auto d : degree) spread += dmax - d;
    r.deg_centralization = static_cast<double>(spread) / static_cast<double>((n - 1) * (n - 2));
    r.out_central = r.deg_centralization;
    r.in_central = r.deg_centralization;
    r.closure = closure(adj);
  }

  std::size_t comp_count = 0;
  const auto comp = label_components(adj, &comp_count);
  r.components = static_cast<std::int64_t>(comp_count);
  r.component_ratio = component_ratio(r.components, n);

  if (n >= 2) {
    std::vector<std::int64_t> sizes(comp_count, 0);
    for (auto c : comp) ++sizes[c];
    std::int64_t reachable = 0;
    for (auto s : sizes) reachable += s * (s - 1);
    const auto pairs = static_cast<double>(n * (n - 1));
    r.connectedness = static_cast<double>(reachable) / pairs;
    r.fragmentation = 1.0 - *r.connectedness;

    // Histogram of geodesic lengths over ordered reachable pairs.
    std::vector<std::int64_t> at_distance(adj.size() + 1, 0);
    std::vector<std::int64_t> dist(adj.size());
    for (std::size_t s = 0; s < adj.size(); ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[s] = 0;
      std::queue<std::size_t> queue;
      queue.push(s);
      while (!queue.empty()) {
        auto u = queue.front();
        queue.pop();
        for (auto v : adj[u]) {
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            ++at_distance[static_cast<std::size_t>(dist[v])];
            queue.push(v);
          }
        }
      }
    }
    std::int64_t finite = 0;
    std::int64_t length_sum = 0;
    CompensatedSum inverse_sum;
    for (std::size_t k = 1; k < at_distance.size(); ++k) {
      if (at_distance[k] == 0) continue;
      finite += at_distance[k];
      length_sum += at_distance[k] * static_cast<std::int64_t>(k);
      inverse_sum += static_cast<double>(at_distance[k]) / static_cast<double>(k);
      r.diameter = static_cast<std::int64_t>(k);
    }
    r.compactness = inverse_sum.value() / pairs;
    r.breadth = 1.0 - *r.compactness;
    if (finite > 0) {
      const double mean = static_cast<double>(length_sum) / static_cast<double>(finite);
      CompensatedSum squares;
      for (std::size_t k = 1; k < at_distance.size(); ++k) {
        const double dev = static_cast<double>(k) - mean;
        squares += static_cast<double>(at_distance[k]) * dev * dev;
      }
      r.avg_distance = mean;
      r.sd_distance = std::sqrt(squares.value() / static_cast<double>(finite));
    }
  }
  return r;
}

CohesionReport cohesion_report(const CooccurrenceMatrix& m) { return cohesion_report(binary_adjacency(m)); }

std::string format_cohesion_report(const CohesionReport& r) {
  auto real = [](const std::optional<double>& v) { return v ? fixed3(*v) : std::string("undefined"); };
  auto integer = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("undefined"); };
  const std::vector<std::pair<const char*, std::string>> rows = {
      {"Avg Degree", real(r.avg_degree)},
      {"Indeg H-Index", std::to_string(r.indeg_h_index)},
      {"Deg Centralization", real(r.deg_centralization)},
      {"Out-Central", real(r.out_central)},
      {"In-Central", real(r.in_central)},
      {"Density", real(r.density)},
      {"Components", std::to_string(r.components)},
      {"Component Ratio", real(r.component_ratio)},
      {"Connectedness", real(r.connectedness)},
      {"Fragmentation", real(r.fragmentation)},
      {"Closure", real(r.closure)},
      {"Avg Distance", real(r.avg_distance)},
      {"SD Distance", real(r.sd_distance)},
      {"Diameter", integer(r.diameter)},
      {"Breadth", real(r.breadth)},
      {"Compactness", real(r.compactness)},
  };
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += std::to_string(i + 1) + "\t" + rows[i].first + "\t" + rows[i].second + "\n";
  }
  return out;
}

}  // namespace patfolio
