#include "patfolio/diversity.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "patfolio/compensated_sum.hpp"
#include "patfolio/error.hpp"

namespace patfolio {
namespace {

std::vector<std::size_t> support(std::span<const double> p) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) idx.push_back(i);
  }
  return idx;
}

// Both Gini-Simpson and Rao-Stirling are evaluated as 1 - sum p_i p_j s_ij
// (s = identity resp. cosine) with the same accumulation order, so the
// identity map reproduces Gini-Simpson bit for bit.
double complement_of(const CompensatedSum& overlap) {
  return std::max(0.0, 1.0 - overlap.value());
}

}  // namespace

ProportionVector proportions(const ClassVector& v) {
  std::int64_t total = 0;
  for (auto c : v.counts) total += c;
  if (total <= 0) {
    throw Error(ErrorCode::empty_portfolio, "portfolio '" + v.name + "' has no classified patents");
  }
  ProportionVector out{v.classes, std::vector<double>(v.counts.size(), 0.0)};
  const auto denom = static_cast<double>(total);
  for (std::size_t i = 0; i < v.counts.size(); ++i) {
    out.p[i] = static_cast<double>(v.counts[i]) / denom;
  }
  return out;
}

std::int64_t variety(const ClassVector& v) {
  return std::count_if(v.counts.begin(), v.counts.end(), [](auto c) { return c > 0; });
}

std::int64_t variety(std::span<const double> p) {
  return std::count_if(p.begin(), p.end(), [](double x) { return x > 0.0; });
}

double gini_simpson(std::span<const double> p) {
  CompensatedSum overlap;
  for (auto i : support(p)) overlap += p[i] * p[i];
  return complement_of(overlap);
}

double rao_stirling(std::span<const double> p, const SquareMatrix<double>& cosines) {
  if (cosines.size() != p.size()) {
    throw Error(ErrorCode::shape, "proportions have " + std::to_string(p.size()) +
                                      " classes, similarity matrix " + std::to_string(cosines.size()));
  }
  const auto occupied = support(p);
  CompensatedSum overlap;
  for (auto i : occupied) {
    for (auto j : occupied) overlap += p[i] * p[j] * cosines(i, j);
  }
  return complement_of(overlap);
}

double rao_stirling(const ProportionVector& p, const ClassSimilarityMap& sim,
                    std::vector<ClassPair>* missing) {
  if (!p.classes || p.classes->size() != p.p.size()) {
    throw Error(ErrorCode::shape, "proportion vector is not aligned to a class list");
  }
  if (p.classes->level() != sim.level() && p.classes->size() > 0 && sim.size() > 0) {
    throw Error(ErrorCode::shape, "proportions are " + std::string(to_string(p.classes->level())) +
                                      ", base map is " + std::string(to_string(sim.level())));
  }
  if (p.classes == sim.classes() || *p.classes == *sim.classes()) {
    return rao_stirling(p.p, sim.values());
  }

  const auto occupied = support(p.p);
  std::vector<std::optional<std::size_t>> map_index;
  map_index.reserve(occupied.size());
  for (auto i : occupied) map_index.push_back(sim.classes()->index_of((*p.classes)[i]));

  std::set<ClassPair> reported;
  CompensatedSum overlap;
  for (std::size_t a = 0; a < occupied.size(); ++a) {
    for (std::size_t b = 0; b < occupied.size(); ++b) {
      const double pij = p.p[occupied[a]] * p.p[occupied[b]];
      double cos = 0.0;
      if (a == b) {
        cos = map_index[a] ? sim.cosine(*map_index[a], *map_index[a]) : 1.0;
      } else if (map_index[a] && map_index[b]) {
        cos = sim.cosine(*map_index[a], *map_index[b]);
      } else if (missing && a < b) {
        ClassPair pair{(*p.classes)[occupied[a]], (*p.classes)[occupied[b]]};
        if (reported.insert(pair).second) missing->push_back(std::move(pair));
      }
      overlap += pij * cos;
    }
  }
  return complement_of(overlap);
}

double true_diversity(double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::domain, "true diversity needs 0 <= delta < 1, got " + io::format_shortest(delta));
  }
  return 1.0 / (1.0 - delta);
}

DiversityRecord diversity_record(const ClassVector& v, const ClassSimilarityMap& sim,
                                 std::vector<ClassPair>* missing) {
  const auto p = proportions(v);
  DiversityRecord rec;
  rec.name = v.name;
  rec.n_patents = v.n_patents;
  rec.variety = variety(v);
  rec.gini_simpson = gini_simpson(p);
  rec.rao_delta = rao_stirling(p, sim, missing);
  rec.true_diversity = true_diversity(rec.rao_delta);
  return rec;
}

std::string format_delta(double value) { return io::format_fixed(value, 4); }

}  // namespace patfolio
