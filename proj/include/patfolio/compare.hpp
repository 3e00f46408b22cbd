#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "patfolio/io.hpp"
#include "patfolio/portfolio.hpp"

namespace patfolio {

/// Product-moment correlation. Error(shape) on unequal lengths,
/// Error(undefined_correlation) when either side has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

/// Pearson correlation of mean ranks (ties share the average rank).
double spearman(std::span<const double> x, std::span<const double> y);

/// dot / (|x| |y|); Error(undefined_cosine) for a zero vector.
double cosine_sim(std::span<const double> x, std::span<const double> y);

/// 1-based ranks, tied values sharing the mean of their positions.
std::vector<double> average_ranks(std::span<const double> x);

struct RestrictedCorrelation {
  double rho = 0.0;
  std::size_t n = 0;
};

/// Spearman over the indices where both vectors are strictly positive.
/// Error(undefined_correlation) when fewer than two such indices remain.
RestrictedCorrelation restricted_spearman(std::span<const double> x, std::span<const double> y);

std::vector<double> as_reals(const ClassVector& v);

double pearson(const ClassVector& x, const ClassVector& y);
double spearman(const ClassVector& x, const ClassVector& y);
double cosine_sim(const ClassVector& x, const ClassVector& y);
RestrictedCorrelation restricted_spearman(const ClassVector& x, const ClassVector& y);

/// (1 - cosine) among portfolio columns.
struct PortfolioDistanceMatrix {
  std::vector<std::string> names;
  SquareMatrix<double> d;
};

/// Needs at least two columns, each with a nonzero count; Error(argument)
/// or Error(undefined_cosine) naming the offending column otherwise.
PortfolioDistanceMatrix distance_matrix(const MatrixStore& store);
PortfolioDistanceMatrix distance_matrix(std::span<const ClassVector> columns);

/// Tab-separated, header of names then one row of distances per name.
std::string format_distance_matrix(const PortfolioDistanceMatrix& m);
PortfolioDistanceMatrix parse_distance_matrix(std::string_view text);

}  // namespace patfolio
