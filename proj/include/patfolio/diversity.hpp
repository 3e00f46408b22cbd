#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "patfolio/io.hpp"
#include "patfolio/portfolio.hpp"
#include "patfolio/taxonomy.hpp"

namespace patfolio {

/// Shares of a portfolio over its class list; non-negative, summing to 1.
struct ProportionVector {
  ClassListPtr classes;
  std::vector<double> p;
};

struct DiversityRecord {
  std::string name;
  std::int64_t n_patents = 0;
  std::int64_t variety = 0;
  double gini_simpson = 0.0;
  double rao_delta = 0.0;
  double true_diversity = 1.0;

  friend bool operator==(const DiversityRecord&, const DiversityRecord&) = default;
};

/// Error(empty_portfolio) when every count is zero.
ProportionVector proportions(const ClassVector& v);

std::int64_t variety(const ClassVector& v);
std::int64_t variety(std::span<const double> p);

/// 1 - sum p_i^2.
double gini_simpson(std::span<const double> p);
inline double gini_simpson(const ProportionVector& p) { return gini_simpson(p.p); }

/// Rao-Stirling diversity, sum over ordered pairs of p_i p_j (1 - cos_ij),
/// with `cosines` indexed like `p`. Error(shape) on size mismatch.
double rao_stirling(std::span<const double> p, const SquareMatrix<double>& cosines);

using ClassPair = std::pair<std::string, std::string>;

/// Matches classes to the base map by code. A pair involving a class the
/// map lacks counts as cosine 0 and is appended once to `missing` when
/// given. Error(shape) when the levels differ.
double rao_stirling(const ProportionVector& p, const ClassSimilarityMap& sim,
                    std::vector<ClassPair>* missing = nullptr);

/// 1 / (1 - delta); Error(domain) unless 0 <= delta < 1.
double true_diversity(double delta);

/// All measures for one portfolio.
DiversityRecord diversity_record(const ClassVector& v, const ClassSimilarityMap& sim,
                                 std::vector<ClassPair>* missing = nullptr);

/// Four decimals as printed in summaries.
std::string format_delta(double value);

}  // namespace patfolio
