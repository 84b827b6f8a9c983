#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcs {

enum class Color : std::uint8_t { Red, Blue };

constexpr Color opposite(Color c) noexcept {
  return c == Color::Red ? Color::Blue : Color::Red;
}

std::string_view to_string(Color c) noexcept;

// Accepts "red" / "blue"; throws InputError otherwise.
Color parse_color(std::string_view text);

using Vertex = int;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with a red/blue coloring.
///
/// Immutable after construction. Adjacency lists are sorted, so neighbor
/// iteration order is deterministic and `adjacent` is a binary search.
class BicoloredGraph {
 public:
  BicoloredGraph() = default;

  /// Throws InputError on out-of-range ids, self-loops or repeated edges
  /// (in either orientation).
  BicoloredGraph(std::vector<Color> colors, std::span<const Edge> edges);

  int size() const noexcept { return static_cast<int>(colors_.size()); }
  bool empty() const noexcept { return colors_.empty(); }
  bool contains(Vertex v) const noexcept { return v >= 0 && v < size(); }

  Color color(Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  const std::vector<Color>& colors() const noexcept { return colors_; }
  int count(Color c) const noexcept;

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t edge_count() const noexcept { return edge_count_; }
  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const BicoloredGraph&, const BicoloredGraph&) = default;

 private:
  std::vector<Color> colors_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A vertex set claimed to be balanced and connected, tagged with the
/// algorithm that produced it. Vertices are kept sorted.
struct Solution {
  VertexSet vertices;
  int red_count = 0;
  int blue_count = 0;
  std::string algorithm;

  int size() const noexcept { return static_cast<int>(vertices.size()); }
  bool empty() const noexcept { return vertices.empty(); }
};

/// Builds a Solution with counts taken from the graph's coloring.
/// Throws InputError on invalid or repeated ids.
Solution make_solution(const BicoloredGraph& g, VertexSet vertices, std::string algorithm);

struct InducedSubgraph {
  BicoloredGraph graph;
  // original[i] is the id in the parent graph of local vertex i.
  VertexSet original;
};

/// Throws InputError on invalid or repeated ids.
InducedSubgraph induced_subgraph(const BicoloredGraph& g, std::span<const Vertex> s);

/// Throws InputError if any id is out of range or repeated.
void check_vertex_set(const BicoloredGraph& g, std::span<const Vertex> s);

/// True iff G[s] is connected. The empty set is reported as not connected.
bool is_connected(const BicoloredGraph& g, std::span<const Vertex> s);

/// True iff s has as many red as blue vertices (true for the empty set).
bool is_balanced(const BicoloredGraph& g, std::span<const Vertex> s);

/// Number of connected components of the whole graph.
int count_components(const BicoloredGraph& g);

/// Component label per vertex (labels 0..c-1 in order of smallest member).
std::vector<int> component_labels(const BicoloredGraph& g);

/// Accepts the empty solution; otherwise requires valid distinct ids,
/// connectivity, balance, and counts that agree with the coloring.
bool validate_solution(const BicoloredGraph& g, const Solution& sol);

/// 2 * min(|V_R|, |V_B|): no balanced subgraph can be larger.
int balance_upper_bound(const BicoloredGraph& g) noexcept;

}  // namespace bcs
