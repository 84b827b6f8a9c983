#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bcs/geometry.hpp"
#include "bcs/graph.hpp"

namespace bcs {

/// Steiner vertices D chosen to connect a terminal set T. D is disjoint
/// from T; when `connected` is true, T u D induces a connected subgraph.
struct SteinerResult {
  VertexSet steiner_vertices;
  bool connected = false;
};

/// Optional instrumentation of the interval greedy, one entry per selection
/// step: the number of components of T u D and the right endpoint of the
/// leftmost component's rightmost interval, both observed before the step.
struct SteinerTrace {
  std::vector<int> components_before_step;
  std::vector<int> anchor_reach_before_step;
};

/// Greedy minimum Steiner selection on an interval instance given in
/// canonical form. `members` are the span indices forming the host graph H;
/// `is_terminal` is indexed by span index. Each step takes the leftmost
/// component of T u D (smallest right reach), looks at its rightmost
/// interval I, and adds the non-terminal neighbor of I reaching furthest
/// right. Distinct endpoints make that choice unique. Returned ids are span
/// indices. If no neighbor reaches past I while several components remain,
/// the result has connected = false.
SteinerResult greedy_interval_steiner(std::span<const Span> spans, std::span<const int> members,
                                      std::span<const char> is_terminal,
                                      SteinerTrace* trace = nullptr);

/// Minimum-cardinality Steiner set on an interval graph. `g` must be the
/// compiled graph of `m`. Throws InputError on empty/invalid terminals or
/// when the terminals cannot be connected (disconnected substrate).
SteinerResult select_steiners_interval(const IntervalModel& m, const BicoloredGraph& g,
                                       std::span<const Vertex> terminals,
                                       SteinerTrace* trace = nullptr);

/// Exact minimum Steiner set on a permutation diagram given in top order:
/// bottom_rank[i] is the (distinct) bottom rank of the i-th segment from the
/// left on the top line. Returns the chosen positions (terminals included,
/// ascending), or nullopt when no connected superset of the terminals exists.
///
/// A set of segments induces a connected graph iff no proper prefix of it (in
/// top order) occupies exactly the lowest bottom positions of the set. The
/// dynamic program scans top order keeping the last chosen segment, the
/// running maximum bottom rank, and the smallest prefix maximum whose cut is
/// not yet crossed; a later segment crosses that cut iff its bottom rank is
/// below it, and then crosses every later cut too. O(n^4) worst case.
std::optional<std::vector<int>> permutation_steiner_in_top_order(
    std::span<const int> bottom_rank, std::span<const char> terminal_in_order);

/// Minimum-cardinality Steiner set on a permutation graph. Throws
/// InputError on empty/invalid terminals or when g is disconnected.
SteinerResult steiner_permutation(const PermutationModel& m, const BicoloredGraph& g,
                                  std::span<const Vertex> terminals);

struct SteinerOracleLimits {
  int max_vertices = 24;
};

/// Exact minimum Steiner set by subset search in increasing size. Returns
/// connected = false when the terminals lie in different components.
/// Throws CapacityError above the vertex cap, InputError on empty terminals.
SteinerResult steiner_exact_oracle(const BicoloredGraph& g, std::span<const Vertex> terminals,
                                   SteinerOracleLimits limits = {});

/// Independent exact route: node-weighted terminal-subset dynamic program
/// (Dreyfus-Wagner style; non-terminals cost 1). Returns the minimum number
/// of Steiner vertices, or nullopt if the terminals cannot be connected.
/// Throws CapacityError above 14 terminals.
std::optional<int> steiner_terminal_dp_size(const BicoloredGraph& g,
                                            std::span<const Vertex> terminals);

}  // namespace bcs
