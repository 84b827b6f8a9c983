#pragma once

#include <cstdint>

#include "bcs/geometry.hpp"
#include "bcs/graph.hpp"

namespace bcs {

/// Random instance generators. Every generator is a pure function of its
/// arguments (mt19937_64 seeded with `seed`).

struct IntervalGenOptions {
  double min_length = 0.05;
  double max_length = 0.35;
  double red_probability = 0.5;
};

struct ArcGenOptions {
  double min_length = 0.05;
  double max_length = 0.45;
  double red_probability = 0.5;
};

IntervalModel random_interval_model(int n, std::uint64_t seed, IntervalGenOptions options = {});
CircularArcModel random_arc_model(int n, std::uint64_t seed, ArcGenOptions options = {});
PermutationModel random_permutation_model(int n, std::uint64_t seed, double red_probability = 0.5);
/// G(n, p) with independent colors.
BicoloredGraph random_graph(int n, double edge_probability, std::uint64_t seed,
                            double red_probability = 0.5);

}  // namespace bcs
