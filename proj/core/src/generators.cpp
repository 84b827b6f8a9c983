#include "bcs/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "bcs/error.hpp"

namespace bcs {
namespace {

void check_count(int n) {
  if (n < 0) throw InputError("instance size must be non-negative");
}

Color draw_color(std::mt19937_64& rng, double red_probability) {
  return std::bernoulli_distribution(red_probability)(rng) ? Color::Red : Color::Blue;
}

}  // namespace

IntervalModel random_interval_model(int n, std::uint64_t seed, IntervalGenOptions options) {
  check_count(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> start(0.0, 1.0);
  std::uniform_real_distribution<double> length(options.min_length, options.max_length);
  IntervalModel m;
  for (int i = 0; i < n; ++i) {
    const double l = start(rng);
    const double r = l + length(rng);
    m.items.push_back({l, r, draw_color(rng, options.red_probability)});
  }
  return m;
}

CircularArcModel random_arc_model(int n, std::uint64_t seed, ArcGenOptions options) {
  check_count(n);
  if (!(options.min_length > 0.0 && options.max_length < 1.0 && options.min_length <= options.max_length)) {
    throw InputError("arc lengths must satisfy 0 < min <= max < 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> start(0.0, 1.0);
  std::uniform_real_distribution<double> length(options.min_length, options.max_length);
  CircularArcModel m;
  for (int i = 0; i < n; ++i) {
    const double s = start(rng);
    const double len = length(rng);
    m.items.push_back({s, len, draw_color(rng, options.red_probability)});
  }
  return m;
}

PermutationModel random_permutation_model(int n, std::uint64_t seed, double red_probability) {
  check_count(n);
  std::mt19937_64 rng(seed);
  std::vector<int> bottom(static_cast<std::size_t>(n));
  std::iota(bottom.begin(), bottom.end(), 1);
  std::shuffle(bottom.begin(), bottom.end(), rng);
  PermutationModel m;
  for (int i = 0; i < n; ++i) {
    m.items.push_back({i + 1, bottom[static_cast<std::size_t>(i)], draw_color(rng, red_probability)});
  }
  return m;
}

BicoloredGraph random_graph(int n, double edge_probability, std::uint64_t seed,
                            double red_probability) {
  check_count(n);
  std::mt19937_64 rng(seed);
  std::vector<Color> colors;
  for (int i = 0; i < n; ++i) colors.push_back(draw_color(rng, red_probability));
  std::bernoulli_distribution edge(edge_probability);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  return BicoloredGraph(std::move(colors), edges);
}

}  // namespace bcs
