// Generated by tests/fixtures/e2e/make_goldens.py; do not edit.
#pragma once

#include <array>
#include <cstdint>

namespace e2e {

inline constexpr std::array<const char*, 3> kCities = {"alpha", "beta", "gamma"};
// alpha: occupied B64C G06F H04L Y02E
inline constexpr const char* kAlphaCooccurrence =
    "B64C\tG06F\tH04L\tY02E\n"
    "0\t1\t0\t0\n"
    "1\t0\t1\t0\n"
    "0\t1\t0\t1\n"
    "0\t0\t1\t0\n";
// beta: occupied A01B C07D Y02E
inline constexpr const char* kBetaCooccurrence =
    "A01B\tC07D\tY02E\n"
    "0\t2\t1\n"
    "2\t0\t1\n"
    "1\t1\t0\n";
// gamma: occupied B64C G06F H04L Y02E
inline constexpr const char* kGammaCooccurrence =
    "B64C\tG06F\tH04L\tY02E\n"
    "0\t1\t1\t1\n"
    "1\t0\t1\t0\n"
    "1\t1\t0\t0\n"
    "1\t0\t0\t0\n";

struct Row {
  const char* name;
  std::int64_t n_patents, variety;
  double gini_simpson, rao_delta, true_diversity;
  std::array<std::int64_t, 6> counts;
  std::int64_t unknown;
};

inline constexpr std::array<Row, 3> kRows = {{
    {"alpha", 4, 4, 0.6938775510204081632653061, 0.4, 1.666666666666666666666667, {0, 1, 0, 3, 2, 1}, 0},
    {"beta", 4, 3, 0.6122448979591836734693878, 0.4040816326530612244897959, 1.678082191780821917808219, {3, 0, 3, 0, 0, 1}, 1},
    {"gamma", 4, 4, 0.6938775510204081632653061, 0.4897959183673469387755102, 1.96, {0, 3, 0, 1, 2, 1}, 0},
}};

struct Pair {
  const char* a;
  const char* b;
  double pearson, spearman, cosine, distance;
};

inline constexpr std::array<Pair, 3> kPairs = {{
    {"alpha", "beta", -0.8329517575430141606387895, -0.8898984166292194944169909, 0.0592348877759092357302347, 0.9407651122240907642697653},
    {"alpha", "gamma", 0.4146341463414634146341463, 0.6212121212121212121212121, 0.7333333333333333333333333, 0.2666666666666666666666667},
    {"beta", "gamma", -0.8329517575430141606387895, -0.8898984166292194944169909, 0.0592348877759092357302347, 0.9407651122240907642697653},
}};

}  // namespace e2e
