#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>

#include "bcs/geometry.hpp"
#include "bcs/graph.hpp"

namespace bcs {

using GridPoint = std::pair<int, int>;

/// A generated BCS instance together with the size the construction
/// promises exactly when the source instance is a yes-instance.
struct ReductionOutput {
  std::variant<PointSetModel, BicoloredGraph> instance;
  int target_size = 0;
  std::string case_tag;  // rst_case1, rst_case2, square, grid, domset
  int rst_case = 0;      // 1 or 2 for the Steiner tree reductions, else 0
  std::string provenance;
  std::optional<std::string> warning;
};

/// Steiner tree on integer points with budget L, turned into a unit-disk
/// instance. The grid over the bounding box of P holds red vertices at P
/// and blue vertices elsewhere; p_l is the leftmost point (lowest on ties).
///
/// When L + 1 >= 2|P| a red path of L - 2|P| + 1 vertices runs left from
/// p_l and the target is 2(L - |P| + 1). Otherwise a blue path of 2|P| - L
/// vertices runs left from p_l, one more red vertex closes it, and the
/// target is 2(|P| + 1). Points come out sorted by (y, x).
///
/// Throws InputError on an empty or repeated point list or negative L. A
/// single point with L = 0 is built with a warning attached.
ReductionOutput reduce_rst_to_unit_disk(std::span<const GridPoint> points, int budget);

/// Same construction, realized with unit squares.
ReductionOutput reduce_rst_to_unit_square(std::span<const GridPoint> points, int budget);

/// Unit-disk construction completed to a full rectangle of the unit grid:
/// every free integer point of the extended bounding box gets a blue vertex.
ReductionOutput reduce_rst_to_complete_grid(std::span<const GridPoint> points, int budget);

/// Dominating set of size k in g, turned into a graph H on 3n + k vertices:
/// red v_i = i, blue v'_i = n + i, red path r_j = 2n + j, blue path
/// b_j = 2n + k + j. Target 2(n + k). g's coloring is ignored. Throws
/// InputError unless 1 <= k <= n.
ReductionOutput reduce_domset_to_outer_string(const BicoloredGraph& g, int k);

/// Compiles the instance of a reduction output to its graph.
BicoloredGraph reduction_graph(const ReductionOutput& out);

}  // namespace bcs
