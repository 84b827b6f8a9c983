#pragma once

#include <span>
#include <vector>

#include "bcs/geometry.hpp"
#include "bcs/graph.hpp"

namespace bcs {

/// Candidate window S(u, v): every interval w with l_u <= l_w < r_w <= r_v,
/// together with u and v themselves. u == v is allowed.
struct Window {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet members;  // sorted
};

/// Two-dimensional dominance index over canonical spans: intervals sorted by
/// left endpoint in a segment tree whose nodes keep their members sorted by
/// right endpoint. A query costs O(log^2 n + output).
class WindowIndex {
 public:
  explicit WindowIndex(std::span<const Span> spans);

  /// Appends every id with l >= lo and r <= hi to out (unsorted).
  void collect(int lo, int hi, std::vector<int>& out) const;

 private:
  void build(std::size_t node, std::size_t begin, std::size_t end);
  void collect(std::size_t node, std::size_t begin, std::size_t end, std::size_t from, int hi,
               std::vector<int>& out) const;

  std::vector<Span> spans_;
  std::vector<int> by_left_;
  std::vector<int> lefts_;
  std::vector<std::vector<int>> tree_;
};

/// Sorted window member ids for the pair (u, v); u and v are span indices.
VertexSet window_members(std::span<const Span> spans, const WindowIndex& index, int u, int v);

/// Best balanced connected subset of a window that contains both u and v,
/// in canonical form. The minority color of the window (blue on ties) plus
/// u and v are the terminals of the greedy Steiner selection; the majority
/// color pads the result to twice the minority count. Returns span indices,
/// or an empty set if the window is disconnected or needs too many majority
/// vertices.
VertexSet solve_window(std::span<const Span> spans, std::span<const Color> colors, int u, int v,
                       std::span<const int> members);

/// Maximum over all windows (u, v) with l_u <= l_v, in canonical form.
VertexSet solve_interval_instance(std::span<const Span> spans, std::span<const Color> colors);

/// Throws InputError unless l_u <= l_v.
Window candidate_window(const IntervalModel& m, Vertex u, Vertex v);

/// Solves one window; `g` must be the compiled graph of `m`.
Solution bcs_window(const IntervalModel& m, const BicoloredGraph& g, const Window& w);

/// Maximum balanced connected subgraph of an interval graph.
Solution bcs_interval(const IntervalModel& m);

inline constexpr const char* kIntervalTag = "interval";

}  // namespace bcs
