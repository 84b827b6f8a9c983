#include "bcs/graph.hpp"

#include <algorithm>
#include <string>

#include "bcs/error.hpp"

namespace bcs {

std::string_view to_string(Color c) noexcept {
  return c == Color::Red ? "red" : "blue";
}

Color parse_color(std::string_view text) {
  if (text == "red") return Color::Red;
  if (text == "blue") return Color::Blue;
  throw InputError("unknown color '" + std::string(text) + "' (expected red or blue)");
}

BicoloredGraph::BicoloredGraph(std::vector<Color> colors, std::span<const Edge> edges)
    : colors_(std::move(colors)), adjacency_(colors_.size()) {
  const int n = size();
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") references a vertex outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
      throw InputError("duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
    }
  }
  edge_count_ = edges.size();
}

int BicoloredGraph::count(Color c) const noexcept {
  return static_cast<int>(std::count(colors_.begin(), colors_.end(), c));
}

bool BicoloredGraph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> BicoloredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void check_vertex_set(const BicoloredGraph& g, std::span<const Vertex> s) {
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw InputError("vertex id " + std::to_string(v) + " outside [0, " +
                       std::to_string(g.size()) + ")");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw InputError("vertex id " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Solution make_solution(const BicoloredGraph& g, VertexSet vertices, std::string algorithm) {
  check_vertex_set(g, vertices);
  std::sort(vertices.begin(), vertices.end());
  Solution sol;
  for (Vertex v : vertices) {
    if (g.color(v) == Color::Red) {
      ++sol.red_count;
    } else {
      ++sol.blue_count;
    }
  }
  sol.vertices = std::move(vertices);
  sol.algorithm = std::move(algorithm);
  return sol;
}

InducedSubgraph induced_subgraph(const BicoloredGraph& g, std::span<const Vertex> s) {
  check_vertex_set(g, s);
  std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
  std::vector<Color> colors;
  colors.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    local[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
    colors.push_back(g.color(s[i]));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbors(s[i])) {
      const int j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return {BicoloredGraph(std::move(colors), edges), VertexSet(s.begin(), s.end())};
}

bool is_connected(const BicoloredGraph& g, std::span<const Vertex> s) {
  if (s.empty()) return false;
  check_vertex_set(g, s);
  // 0 = outside s, 1 = in s unvisited, 2 = visited
  std::vector<char> state(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v : s) state[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> stack{s.front()};
  state[static_cast<std::size_t>(s.front())] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (state[static_cast<std::size_t>(w)] == 1) {
        state[static_cast<std::size_t>(w)] = 2;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

bool is_balanced(const BicoloredGraph& g, std::span<const Vertex> s) {
  check_vertex_set(g, s);
  int diff = 0;
  for (Vertex v : s) diff += g.color(v) == Color::Red ? 1 : -1;
  return diff == 0;
}

std::vector<int> component_labels(const BicoloredGraph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.size()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.size(); ++root) {
    if (label[static_cast<std::size_t>(root)] >= 0) continue;
    label[static_cast<std::size_t>(root)] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int count_components(const BicoloredGraph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool validate_solution(const BicoloredGraph& g, const Solution& sol) {
  if (sol.vertices.empty()) return sol.red_count == 0 && sol.blue_count == 0;
  try {
    check_vertex_set(g, sol.vertices);
  } catch (const InputError&) {
    return false;
  }
  int reds = 0;
  for (Vertex v : sol.vertices) reds += g.color(v) == Color::Red ? 1 : 0;
  const int blues = sol.size() - reds;
  if (reds != sol.red_count || blues != sol.blue_count) return false;
  return reds == blues && is_connected(g, sol.vertices);
}

int balance_upper_bound(const BicoloredGraph& g) noexcept {
  return 2 * std::min(g.count(Color::Red), g.count(Color::Blue));
}

}  // namespace bcs
