#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "bcs/graph.hpp"

namespace bcs {

struct OracleBudget {
  int max_vertices = 18;
  int max_terminals = 8;
};

/// Calls `visit(mask)` once for every nonempty connected vertex subset of
/// size at most `max_size`, growing each subset from its smallest vertex
/// and only ever adding vertices that are new to its exclusive
/// neighborhood, so no subset is produced twice. Stops early when `visit`
/// returns true. Requires n <= 64.
void for_each_connected_subset(const BicoloredGraph& g, int max_size,
                               const std::function<bool(std::uint64_t)>& visit);

/// Exact maximum balanced connected subgraph. Throws CapacityError above
/// budget.max_vertices.
Solution bcs_oracle(const BicoloredGraph& g, OracleBudget budget = {});

/// True iff some balanced connected subgraph has at least `target` vertices;
/// stops at the first one found.
bool bcs_oracle_reaches(const BicoloredGraph& g, int target, OracleBudget budget = {});

/// True iff a balanced connected subgraph of exactly k vertices exists
/// (k = 0 is the empty set).
bool k_bcs_oracle(const BicoloredGraph& g, int k, OracleBudget budget = {});

using GridPoint = std::pair<int, int>;

/// Minimum total length of a rectilinear Steiner tree on integer points,
/// as a node-weighted Steiner tree in the unit grid over their bounding
/// box. Duplicates are merged. Throws InputError on an empty list and
/// CapacityError above 5 distinct points or a coordinate spread above 6.
int rst_oracle(std::span<const GridPoint> points);

/// True iff some U with |U| <= k has N[U] = V. Throws CapacityError for
/// n > 12, InputError for k < 0.
bool dominating_set_oracle(const BicoloredGraph& g, int k);

inline constexpr const char* kOracleTag = "oracle";

}  // namespace bcs
