#pragma once

#include <vector>

#include "bcs/geometry.hpp"
#include "bcs/graph.hpp"

namespace bcs {

/// Order-contiguous block of segments: positions i..j (0-based, i < j) in
/// the order of top endpoints.
struct OrderedRange {
  int i = 0;
  int j = 0;
};

/// Vertex ids sorted by top endpoint. Throws InputError on a malformed model.
std::vector<Vertex> top_order(const PermutationModel& m);

/// True iff the segments in the range induce a connected subgraph.
bool range_connected(const PermutationModel& m, OrderedRange rng);

/// Best balanced connected subset of the range: every minority-color
/// segment of the range is a terminal, the exact permutation Steiner
/// selection connects them, and majority-color segments adjacent to the
/// partial solution are added in top order until the colors are even.
/// Empty when the range is disconnected, monochromatic, or the Steiner set
/// needs more majority segments than there are minority ones. `g` must be
/// the compiled graph of `m`.
Solution bcs_range(const PermutationModel& m, const BicoloredGraph& g, OrderedRange rng);

/// Maximum balanced connected subgraph of a permutation graph.
Solution bcs_permutation(const PermutationModel& m);

inline constexpr const char* kPermutationTag = "permutation";

}  // namespace bcs
