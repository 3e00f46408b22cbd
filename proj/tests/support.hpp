#pragma once

// Shared test fixtures and brute-force reference implementations. The
// oracles here deliberately avoid the library's code paths: no compensated
// sums, no BFS, no shared normalization helpers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "patfolio/error.hpp"
#include "patfolio/ingest.hpp"
#include "patfolio/io.hpp"
#include "patfolio/taxonomy.hpp"

namespace patfolio::support {

inline std::filesystem::path fixture_dir() { return PATFOLIO_FIXTURE_DIR; }

/// Code of the patfolio::Error thrown by `f`, or nullopt if none.
inline std::optional<ErrorCode> error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng{std::random_device{}()};
    path_ = std::filesystem::temp_directory_path() / ("patfolio-test-" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  [[nodiscard]] const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

/// Synthetic four-digit codes "A00A", "A00B", ... in sorted order.
inline std::vector<std::string> synthetic_codes(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string code = "A00A";
    code[0] = static_cast<char>('A' + (i / 260) % 8);
    code[1] = static_cast<char>('0' + (i / 26) % 10);
    code[2] = static_cast<char>('0' + (i / 2600) % 10);
    code[3] = static_cast<char>('A' + i % 26);
    out.push_back(code);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Random symmetric similarity matrix with unit diagonal and entries in [0,1].
inline SquareMatrix<double> random_similarity(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SquareMatrix<double> m(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = u(rng) < 0.3 ? 0.0 : u(rng);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

inline SquareMatrix<double> identity(std::size_t n) {
  SquareMatrix<double> m(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

// --- oracles -------------------------------------------------------------

/// Literal double sum over ordered pairs of p_i p_j (1 - cos_ij).
inline double oracle_rao(const std::vector<double>& p, const SquareMatrix<double>& cos) {
  long double total = 0.0L;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      total += static_cast<long double>(p[i]) * p[j] * (1.0L - cos(i, j));
    }
  }
  return static_cast<double>(total);
}

inline double oracle_mean(const std::vector<double>& x) {
  long double s = 0.0L;
  for (double v : x) s += v;
  return static_cast<double>(s / x.size());
}

inline double oracle_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  long double cov = 0, vx = 0, vy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cov += (x[i] - mx) * (y[i] - my);
    vx += (x[i] - mx) * (x[i] - mx);
    vy += (y[i] - my) * (y[i] - my);
  }
  return static_cast<double>(cov / std::sqrt(vx * vy));
}

/// Rank by counting: 1 + #smaller + (#equal - 1) / 2.
inline std::vector<double> oracle_ranks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t smaller = 0, equal = 0;
    for (double v : x) {
      if (v < x[i]) ++smaller;
      if (v == x[i]) ++equal;
    }
    r[i] = 1.0 + static_cast<double>(smaller) + (static_cast<double>(equal) - 1.0) / 2.0;
  }
  return r;
}

inline double oracle_spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return oracle_pearson(oracle_ranks(x), oracle_ranks(y));
}

inline double oracle_cosine(const std::vector<double>& x, const std::vector<double>& y) {
  long double dot = 0, xx = 0, yy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += static_cast<long double>(x[i]) * y[i];
    xx += static_cast<long double>(x[i]) * x[i];
    yy += static_cast<long double>(y[i]) * y[i];
  }
  return static_cast<double>(dot / (std::sqrt(xx) * std::sqrt(yy)));
}

/// Cohesion measures from an adjacency matrix via Floyd-Warshall and
/// exhaustive triple enumeration.
struct OracleCohesion {
  double avg_degree = 0, density = 0, centralization = 0, component_ratio = 0;
  double connectedness = 0, closure = 0, avg_distance = 0, sd_distance = 0, compactness = 0;
  std::int64_t h_index = 0, components = 0, diameter = 0;
  bool closure_defined = false, distances_defined = false;
};

inline OracleCohesion oracle_cohesion(const std::vector<std::vector<bool>>& adj) {
  const auto n = adj.size();
  OracleCohesion o;
  std::vector<std::int64_t> degree(n, 0);
  std::int64_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j]) ++degree[i];
      if (i < j && adj[i][j]) ++edges;
    }
  }
  o.avg_degree = 2.0 * edges / n;
  o.density = 2.0 * edges / (static_cast<double>(n) * (n - 1));
  for (std::int64_t h = 0; h <= static_cast<std::int64_t>(n); ++h) {
    std::int64_t at_least = 0;
    for (auto d : degree) at_least += d >= h;
    if (at_least >= h) o.h_index = h;
  }
  const auto dmax = *std::max_element(degree.begin(), degree.end());
  double spread = 0;
  for (auto d : degree) spread += dmax - d;
  o.centralization = spread / ((n - 1.0) * (n - 2.0));

  constexpr std::int64_t kInf = 1 << 28;
  std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    dist[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j]) dist[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  // components: count nodes that are the smallest member of their reach set
  for (std::size_t i = 0; i < n; ++i) {
    bool smallest = true;
    for (std::size_t j = 0; j < i; ++j) smallest = smallest && dist[i][j] >= kInf;
    o.components += smallest;
  }
  o.component_ratio = (o.components - 1.0) / (n - 1.0);

  std::vector<double> lengths;
  double inverse = 0;
  std::int64_t reachable = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || dist[i][j] >= kInf) continue;
      ++reachable;
      lengths.push_back(static_cast<double>(dist[i][j]));
      inverse += 1.0 / dist[i][j];
      o.diameter = std::max(o.diameter, dist[i][j]);
    }
  }
  o.connectedness = reachable / (static_cast<double>(n) * (n - 1));
  o.compactness = inverse / (static_cast<double>(n) * (n - 1));
  if (!lengths.empty()) {
    o.distances_defined = true;
    double sum = 0;
    for (double l : lengths) sum += l;
    o.avg_distance = sum / lengths.size();
    double sq = 0;
    for (double l : lengths) sq += (l - o.avg_distance) * (l - o.avg_distance);
    o.sd_distance = std::sqrt(sq / lengths.size());
  }

  std::int64_t triangles = 0, triples = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const int links = adj[a][b] + adj[b][c] + adj[a][c];
        if (links == 3) {
          ++triangles;
          triples += 3;
        } else if (links == 2) {
          ++triples;
        }
      }
    }
  }
  if (triples > 0) {
    o.closure_defined = true;
    o.closure = 3.0 * triangles / triples;
  }
  return o;
}

/// Upper-cased first four non-space characters, or nullopt if not A99A.
inline std::optional<std::string> oracle_class4(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (c == ' ' || c == '\t') continue;
    if (s.size() == 4) break;
    s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  if (s.size() != 4 || !std::isupper(static_cast<unsigned char>(s[0])) || !std::isdigit(static_cast<unsigned char>(s[1])) ||
      !std::isdigit(static_cast<unsigned char>(s[2])) || !std::isupper(static_cast<unsigned char>(s[3]))) {
    return std::nullopt;
  }
  return s;
}

/// Union-find size of the largest connected set.
inline std::size_t oracle_largest_component(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t i = 0; i < n; ++i) ++sizes[find(i)];
  std::size_t best = 0;
  for (auto& [root, size] : sizes) best = std::max(best, size);
  return best;
}

// --- generators ------------------------------------------------------------

/// Random patents whose symbols are drawn from `codes` with a subgroup
/// suffix, issued in 2013..2015.
inline std::vector<PatentRecord> random_records(std::size_t count, const std::vector<std::string>& codes,
                                                std::mt19937_64& rng, std::size_t max_symbols = 5,
                                                const std::string& prefix = "US") {
  std::uniform_int_distribution<std::size_t> pick(0, codes.size() - 1);
  std::uniform_int_distribution<std::size_t> nsym(0, max_symbols);
  std::uniform_int_distribution<int> year(2013, 2015), month(1, 12), day(1, 28), group(1, 99);
  std::vector<PatentRecord> out;
  for (std::size_t i = 0; i < count; ++i) {
    PatentRecord r;
    r.patent_id = prefix + std::to_string(8000000 + i);
    r.issue_date = std::chrono::year{year(rng)} / std::chrono::month{static_cast<unsigned>(month(rng))} /
                   std::chrono::day{static_cast<unsigned>(day(rng))};
    r.inventor_locations.push_back({"Toulouse", std::nullopt, "FR"});
    if (rng() % 3 == 0) r.inventor_locations.push_back({"Boston", std::string("MA"), "US"});
    const auto k = nsym(rng);
    for (std::size_t s = 0; s < k; ++s) {
      r.class_symbols.push_back(codes[pick(rng)] + " " + std::to_string(group(rng)) + "/" + std::to_string(group(rng)));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace patfolio::support
