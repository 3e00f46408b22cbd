#include "patfolio/compare.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "patfolio/compensated_sum.hpp"
#include "patfolio/error.hpp"

namespace patfolio {
namespace {

void require_same_length(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::shape, "vectors have lengths " + std::to_string(x.size()) + " and " +
                                      std::to_string(y.size()));
  }
}

double mean(std::span<const double> x) {
  CompensatedSum s;
  for (double v : x) s += v;
  return s.value() / static_cast<double>(x.size());
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y);
  if (x.size() < 2) throw Error(ErrorCode::undefined_correlation, "correlation needs at least two observations");
  const double mx = mean(x);
  const double my = mean(y);
  CompensatedSum sxy, sxx, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx.value() > 0.0) || !(syy.value() > 0.0)) {
    throw Error(ErrorCode::undefined_correlation, "correlation is undefined for a constant vector");
  }
  const double r = sxy.value() / std::sqrt(sxx.value() * syy.value());
  return std::clamp(r, -1.0, 1.0);
}

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  for (std::size_t start = 0; start < order.size();) {
    auto end = start + 1;
    while (end < order.size() && x[order[end]] == x[order[start]]) ++end;
    // positions start+1 .. end share their mean
    const double rank = (static_cast<double>(start + 1) + static_cast<double>(end)) / 2.0;
    for (auto k = start; k < end; ++k) ranks[order[k]] = rank;
    start = end;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y);
  if (x.size() < 2) throw Error(ErrorCode::undefined_correlation, "correlation needs at least two observations");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

double cosine_sim(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y);
  CompensatedSum dot, xx, yy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += x[i] * y[i];
    xx += x[i] * x[i];
    yy += y[i] * y[i];
  }
  if (!(xx.value() > 0.0) || !(yy.value() > 0.0)) {
    throw Error(ErrorCode::undefined_cosine, "cosine is undefined for a zero vector");
  }
  // One square root of the product keeps cos(x, x) exactly 1.
  return std::clamp(dot.value() / std::sqrt(xx.value() * yy.value()), -1.0, 1.0);
}

RestrictedCorrelation restricted_spearman(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y);
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0) {
      xs.push_back(x[i]);
      ys.push_back(y[i]);
    }
  }
  if (xs.size() < 2) {
    throw Error(ErrorCode::undefined_correlation,
                "only " + std::to_string(xs.size()) + " classes are shared by both portfolios");
  }
  return {spearman(xs, ys), xs.size()};
}

std::vector<double> as_reals(const ClassVector& v) {
  std::vector<double> out(v.counts.size());
  std::transform(v.counts.begin(), v.counts.end(), out.begin(), [](auto c) { return static_cast<double>(c); });
  return out;
}

double pearson(const ClassVector& x, const ClassVector& y) { return pearson(as_reals(x), as_reals(y)); }
double spearman(const ClassVector& x, const ClassVector& y) { return spearman(as_reals(x), as_reals(y)); }
double cosine_sim(const ClassVector& x, const ClassVector& y) { return cosine_sim(as_reals(x), as_reals(y)); }
RestrictedCorrelation restricted_spearman(const ClassVector& x, const ClassVector& y) {
  return restricted_spearman(as_reals(x), as_reals(y));
}

PortfolioDistanceMatrix distance_matrix(std::span<const ClassVector> columns) {
  if (columns.size() < 2) {
    throw Error(ErrorCode::argument, "a distance matrix needs at least two portfolios");
  }
  std::vector<std::vector<double>> reals;
  PortfolioDistanceMatrix out;
  for (const auto& c : columns) {
    if (std::all_of(c.counts.begin(), c.counts.end(), [](auto n) { return n == 0; })) {
      throw Error(ErrorCode::undefined_cosine, "portfolio '" + c.name + "' is empty");
    }
    if (c.counts.size() != columns.front().counts.size()) {
      throw Error(ErrorCode::shape, "portfolio '" + c.name + "' has a different class count");
    }
    reals.push_back(as_reals(c));
    out.names.push_back(c.name);
  }
  out.d = SquareMatrix<double>(columns.size(), 0.0);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      const double d = std::clamp(1.0 - cosine_sim(reals[i], reals[j]), 0.0, 1.0);
      out.d(i, j) = d;
      out.d(j, i) = d;
    }
  }
  return out;
}

PortfolioDistanceMatrix distance_matrix(const MatrixStore& store) { return distance_matrix(store.columns); }

std::string format_distance_matrix(const PortfolioDistanceMatrix& m) {
  return io::format_labeled_matrix(m.names, m.d);
}

PortfolioDistanceMatrix parse_distance_matrix(std::string_view text) {
  auto lm = io::parse_labeled_matrix(text);
  return {std::move(lm.labels), std::move(lm.values)};
}

}  // namespace patfolio
