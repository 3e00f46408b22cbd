#include <gtest/gtest.h>

#include <numeric>

#include "patfolio/error.hpp"
#include "patfolio/network.hpp"
#include "support.hpp"

using namespace patfolio;

namespace {

PatentRecord patent(std::string id, std::vector<std::string> symbols) {
  PatentRecord r;
  r.patent_id = std::move(id);
  r.issue_date = std::chrono::year{2014} / 1 / 1;
  r.class_symbols = std::move(symbols);
  return r;
}

using Adjacency = std::vector<std::vector<std::size_t>>;

std::vector<std::vector<bool>> random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = edge(rng);
  }
  return adj;
}

Adjacency to_lists(const std::vector<std::vector<bool>>& adj) {
  Adjacency out(adj.size());
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j = 0; j < adj.size(); ++j) {
      if (adj[i][j]) out[i].push_back(j);
    }
  }
  return out;
}

CooccurrenceMatrix random_cooccurrence(std::size_t n, std::mt19937_64& rng) {
  SquareMatrix<std::int64_t> w(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) w(i, j) = w(j, i) = rng() % 3 == 0 ? 0 : static_cast<std::int64_t>(rng() % 9);
  }
  return make_cooccurrence(support::synthetic_codes(n), w);
}

}  // namespace

TEST(Cooccurrence, Examples) {
  const ClassList list({"A01B", "B64C", "G06F"});
  const std::vector<PatentRecord> one{patent("US1", {"A01B 1/00", "G06F 17/30"})};
  const auto m = cooccurrence(one, list);
  EXPECT_EQ(m.codes, (std::vector<std::string>{"A01B", "G06F"}));
  EXPECT_EQ(m.w(0, 1), 1);
  EXPECT_EQ(m.w(1, 0), 1);
  const std::vector<PatentRecord> single{patent("US1", {"B64C 1/00", "B64C 3/00"})};
  const auto s = cooccurrence(single, list);
  EXPECT_EQ(s.codes.size(), 1u);
  EXPECT_EQ(s.w(0, 0), 0);
}

TEST(Cooccurrence, MatchesPairTally) {
  std::mt19937_64 rng{30};
  const auto codes = support::synthetic_codes(12);
  const ClassList list(codes);
  for (int t = 0; t < 20; ++t) {
    const auto recs = support::random_records(30, codes, rng, 6);
    std::map<std::pair<std::string, std::string>, std::int64_t> tally;
    std::set<std::string> nodes;
    for (const auto& r : recs) {
      std::set<std::string> distinct;
      for (const auto& s : r.class_symbols) distinct.insert(s.substr(0, 4));
      nodes.insert(distinct.begin(), distinct.end());
      for (const auto& a : distinct) {
        for (const auto& b : distinct) {
          if (a != b) ++tally[{a, b}];
        }
      }
    }
    const auto m = cooccurrence(recs, list);
    ASSERT_EQ(m.codes, std::vector<std::string>(nodes.begin(), nodes.end()));
    for (std::size_t i = 0; i < m.codes.size(); ++i) {
      for (std::size_t j = 0; j < m.codes.size(); ++j) {
        auto it = tally.find({m.codes[i], m.codes[j]});
        EXPECT_EQ(m.w(i, j), it == tally.end() ? 0 : it->second);
      }
    }
  }
}

TEST(CosineRows, Examples) {
  // A and B share partner C only; C and D have disjoint partner sets.
  SquareMatrix<std::int64_t> w(4, 0);
  w(0, 2) = w(2, 0) = 2;
  w(1, 2) = w(2, 1) = 2;
  w(2, 3) = w(3, 2) = 1;
  const auto g = cosine_rows(make_cooccurrence({"A01B", "B64C", "C07D", "D01F"}, w));
  auto weight = [&](std::size_t u, std::size_t v) {
    for (const auto& e : g.edges) {
      if (e.u == u && e.v == v) return e.weight;
    }
    return -1.0;
  };
  EXPECT_EQ(g.edges.size(), 6u);
  EXPECT_EQ(weight(0, 1), 1.0);
  EXPECT_EQ(weight(0, 2), 0.0);
  EXPECT_EQ(weight(2, 3), 0.0);
}

TEST(CosineRows, MatchesDotNormOracle) {
  std::mt19937_64 rng{31};
  for (int t = 0; t < 100; ++t) {
    const auto m = random_cooccurrence(6, rng);
    const auto g = cosine_rows(m);
    for (const auto& e : g.edges) {
      std::vector<double> a(6), b(6);
      for (std::size_t k = 0; k < 6; ++k) {
        a[k] = static_cast<double>(m.w(e.u, k));
        b[k] = static_cast<double>(m.w(e.v, k));
      }
      const bool zero = std::all_of(a.begin(), a.end(), [](double x) { return x == 0; }) ||
                        std::all_of(b.begin(), b.end(), [](double x) { return x == 0; });
      EXPECT_NEAR(e.weight, zero ? 0.0 : support::oracle_cosine(a, b), 1e-12);
    }
  }
}

TEST(Threshold, Rules) {
  std::mt19937_64 rng{32};
  const auto g = cosine_rows(random_cooccurrence(10, rng));
  std::size_t positive = 0, above = 0;
  for (const auto& e : g.edges) {
    positive += e.weight > 0;
    above += e.weight > 0.2;
  }
  EXPECT_EQ(threshold_graph(g, 0).edges.size(), positive);
  EXPECT_EQ(threshold_graph(g, 0.2).edges.size(), above);
  EXPECT_TRUE(threshold_graph(g, 1).edges.empty());
  EXPECT_EQ(threshold_graph(g, 0.5).node_count(), g.node_count());
  EXPECT_EQ(support::error_code([&] { threshold_graph(g, 1.5); }), ErrorCode::domain);
  // nested edge sets
  const auto low = threshold_graph(g, 0.1), high = threshold_graph(g, 0.4);
  for (const auto& e : high.edges) EXPECT_NE(std::find(low.edges.begin(), low.edges.end(), e), low.edges.end());
}

TEST(LargestComponent, Examples) {
  const auto connected = make_graph({"a", "b", "c"}, {{0, 1, 0.5}, {1, 2, 0.5}});
  EXPECT_EQ(largest_component(connected).labels, connected.labels);
  const auto split = make_graph({"a", "b", "c", "d", "e"}, {{0, 1, 0.5}, {2, 3, 0.5}, {3, 4, 0.7}});
  const auto big = largest_component(split);
  EXPECT_EQ(big.labels, (std::vector<std::string>{"c", "d", "e"}));
  EXPECT_EQ(big.edges, (std::vector<WeightedEdge>{{0, 1, 0.5}, {1, 2, 0.7}}));
  const auto tie = make_graph({"a", "b", "c", "d"}, {{2, 3, 1}, {0, 1, 1}});
  EXPECT_EQ(largest_component(tie).labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(largest_component(SimilarityGraph{}).node_count(), 0u);
}

TEST(LargestComponent, MatchesUnionFind) {
  std::mt19937_64 rng{33};
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 30;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<WeightedEdge> edges;
    const auto adj = random_graph(n, 1.5 / n, rng);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (adj[i][j]) {
          pairs.emplace_back(i, j);
          edges.push_back({i, j, 1.0});
        }
      }
    }
    const auto g = make_graph(std::vector<std::string>(n, "x"), edges);
    EXPECT_EQ(largest_component(g).node_count(), support::oracle_largest_component(n, pairs));
    const auto sizes = component_sizes(g);
    EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}), n);
  }
}

TEST(MakeGraph, RejectsBadEdges) {
  EXPECT_EQ(support::error_code([] { make_graph({"a", "b"}, {{0, 0, 1}}); }), ErrorCode::shape);
  EXPECT_EQ(support::error_code([] { make_graph({"a", "b"}, {{0, 2, 1}}); }), ErrorCode::shape);
  EXPECT_EQ(support::error_code([] { make_graph({"a", "b"}, {{0, 1, 1}, {1, 0, 1}}); }), ErrorCode::shape);
}

TEST(Cohesion, CompleteGraphK4) {
  const auto r = cohesion_report(to_lists(std::vector<std::vector<bool>>{
      {false, true, true, true}, {true, false, true, true}, {true, true, false, true}, {true, true, true, false}}));
  EXPECT_EQ(r.density, 1.0);
  EXPECT_EQ(r.components, 1);
  EXPECT_EQ(r.diameter, 1);
  EXPECT_EQ(r.closure, 1.0);
  EXPECT_EQ(r.compactness, 1.0);
  EXPECT_EQ(r.breadth, 0.0);
  EXPECT_EQ(r.indeg_h_index, 3);
  EXPECT_EQ(r.deg_centralization, 0.0);
}

TEST(Cohesion, SmallGraphsAreUndefined) {
  const auto two = cohesion_report(Adjacency{{1}, {0}});
  EXPECT_FALSE(two.deg_centralization.has_value());
  EXPECT_FALSE(two.closure.has_value());
  EXPECT_EQ(two.density, 1.0);
  EXPECT_EQ(two.diameter, 1);
  const auto one = cohesion_report(Adjacency{{}});
  EXPECT_FALSE(one.avg_distance.has_value());
  EXPECT_FALSE(one.density.has_value());
  EXPECT_FALSE(one.component_ratio.has_value());
  const auto text = format_cohesion_report(two);
  EXPECT_NE(text.find("3\tDeg Centralization\tundefined\n"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 16);
}

TEST(Cohesion, TableArithmetic) {
  auto round3 = [](double v) { return std::round(v * 1000.0) / 1000.0; };
  EXPECT_NEAR(round3(*component_ratio(25, 226)), 0.107, 5e-4);
  EXPECT_NEAR(round3(*density_from_avg_degree(8.159, 226)), 0.036, 5e-4);
  EXPECT_NEAR(round3(*component_ratio(16, 110)), 0.138, 5e-4);
  EXPECT_NEAR(round3(*density_from_avg_degree(6.855, 110)), 0.063, 5e-4);
}

TEST(Cohesion, MatchesBruteForceOracle) {
  std::mt19937_64 rng{34};
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 3 + rng() % 10;
    const auto adj = random_graph(n, 0.1 + 0.6 * (rng() % 100) / 100.0, rng);
    const auto r = cohesion_report(to_lists(adj));
    const auto o = support::oracle_cohesion(adj);
    EXPECT_NEAR(*r.avg_degree, o.avg_degree, 1e-9);
    EXPECT_NEAR(*r.density, o.density, 1e-9);
    EXPECT_EQ(r.indeg_h_index, o.h_index);
    EXPECT_NEAR(*r.deg_centralization, o.centralization, 1e-9);
    EXPECT_EQ(r.out_central, r.deg_centralization);
    EXPECT_EQ(r.in_central, r.deg_centralization);
    EXPECT_EQ(r.components, o.components);
    EXPECT_NEAR(*r.component_ratio, o.component_ratio, 1e-9);
    EXPECT_NEAR(*r.connectedness, o.connectedness, 1e-9);
    EXPECT_NEAR(*r.compactness, o.compactness, 1e-9);
    EXPECT_EQ(r.closure.has_value(), o.closure_defined);
    if (o.closure_defined) EXPECT_NEAR(*r.closure, o.closure, 1e-9);
    EXPECT_EQ(r.avg_distance.has_value(), o.distances_defined);
    if (o.distances_defined) {
      EXPECT_NEAR(*r.avg_distance, o.avg_distance, 1e-9);
      EXPECT_NEAR(*r.sd_distance, o.sd_distance, 1e-9);
      EXPECT_EQ(*r.diameter, o.diameter);
    }
    // identities
    EXPECT_EQ(*r.breadth + *r.compactness, 1.0);
    EXPECT_EQ(*r.fragmentation + *r.connectedness, 1.0);
    EXPECT_EQ(*r.density * static_cast<double>(n - 1), *r.avg_degree);
    EXPECT_NEAR(*r.component_ratio * static_cast<double>(n - 1) + 1.0, static_cast<double>(r.components), 1e-12);
  }
}

TEST(Cohesion, InvariantUnderRelabeling) {
  std::mt19937_64 rng{35};
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 8;
    const auto adj = random_graph(n, 0.3, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<bool>> permuted(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) permuted[perm[i]][perm[j]] = adj[i][j];
    }
    EXPECT_EQ(format_cohesion_report(cohesion_report(to_lists(adj))),
              format_cohesion_report(cohesion_report(to_lists(permuted))));
  }
}

TEST(Cohesion, FromCooccurrenceUsesBinaryEdges) {
  SquareMatrix<std::int64_t> w(3, 0);
  w(0, 1) = w(1, 0) = 7;
  w(1, 2) = w(2, 1) = 1;
  const auto r = cohesion_report(make_cooccurrence({"A01B", "B64C", "C07D"}, w));
  EXPECT_EQ(r.edges, 2);
  EXPECT_DOUBLE_EQ(*r.avg_degree, 4.0 / 3.0);
  EXPECT_EQ(r.diameter, 2);
}
