#include "bcs/reductions.hpp"

#include <algorithm>
#include <map>

#include "bcs/error.hpp"

namespace bcs {
namespace {

using Cells = std::map<std::pair<int, int>, Color>;  // keyed by (y, x)

struct RstLayout {
  Cells cells;
  int rst_case = 0;
  int target = 0;
  int left_x = 0;  // leftmost column used by the appended path
  int x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  std::optional<std::string> warning;
};

RstLayout layout_rst(std::span<const GridPoint> points, int budget) {
  if (points.empty()) throw InputError("point set must be nonempty");
  if (budget < 0) throw InputError("tree length bound must be non-negative");
  std::vector<GridPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    throw InputError("point set contains a repeated point");
  }
  const int count = static_cast<int>(pts.size());

  RstLayout out;
  out.x_min = out.x_max = pts.front().first;
  out.y_min = out.y_max = pts.front().second;
  for (const auto& [x, y] : pts) {
    out.x_min = std::min(out.x_min, x);
    out.x_max = std::max(out.x_max, x);
    out.y_min = std::min(out.y_min, y);
    out.y_max = std::max(out.y_max, y);
  }
  for (int y = out.y_min; y <= out.y_max; ++y) {
    for (int x = out.x_min; x <= out.x_max; ++x) out.cells[{y, x}] = Color::Blue;
  }
  for (const auto& [x, y] : pts) out.cells[{y, x}] = Color::Red;

  // Sorted by x then y, so the front is the leftmost, lowest point.
  const GridPoint anchor = pts.front();
  out.left_x = anchor.first;
  if (budget + 1 >= 2 * count) {
    out.rst_case = 1;
    out.target = 2 * (budget - count + 1);
    for (int i = 1; i <= budget - 2 * count + 1; ++i) {
      out.cells[{anchor.second, anchor.first - i}] = Color::Red;
      out.left_x = anchor.first - i;
    }
  } else {
    out.rst_case = 2;
    out.target = 2 * (count + 1);
    const int path = 2 * count - budget;
    for (int i = 1; i <= path; ++i) out.cells[{anchor.second, anchor.first - i}] = Color::Blue;
    out.cells[{anchor.second, anchor.first - path - 1}] = Color::Red;
    out.left_x = anchor.first - path - 1;
  }
  if (count == 1 && budget == 0) {
    out.warning =
        "single point with L = 0: the construction targets size " + std::to_string(out.target);
  }
  return out;
}

PointSetModel to_model(const Cells& cells, ShapeKind shape) {
  PointSetModel m;
  m.shape = shape;
  for (const auto& [key, color] : cells) {
    m.items.push_back(Point{static_cast<double>(key.second), static_cast<double>(key.first), color});
  }
  return m;
}

std::string describe_points(std::span<const GridPoint> points, int budget) {
  return "rst |P|=" + std::to_string(points.size()) + " L=" + std::to_string(budget);
}

ReductionOutput rst_output(std::span<const GridPoint> points, int budget, ShapeKind shape) {
  auto layout = layout_rst(points, budget);
  ReductionOutput out;
  out.instance = to_model(layout.cells, shape);
  out.target_size = layout.target;
  out.rst_case = layout.rst_case;
  out.case_tag = shape == ShapeKind::UnitSquare ? "square"
                                                 : (layout.rst_case == 1 ? "rst_case1" : "rst_case2");
  out.provenance = describe_points(points, budget);
  out.warning = layout.warning;
  return out;
}

}  // namespace

ReductionOutput reduce_rst_to_unit_disk(std::span<const GridPoint> points, int budget) {
  return rst_output(points, budget, ShapeKind::UnitDisk);
}

ReductionOutput reduce_rst_to_unit_square(std::span<const GridPoint> points, int budget) {
  return rst_output(points, budget, ShapeKind::UnitSquare);
}

ReductionOutput reduce_rst_to_complete_grid(std::span<const GridPoint> points, int budget) {
  auto layout = layout_rst(points, budget);
  for (int y = layout.y_min; y <= layout.y_max; ++y) {
    for (int x = layout.left_x; x <= layout.x_max; ++x) layout.cells.emplace(std::make_pair(y, x), Color::Blue);
  }
  ReductionOutput out;
  out.instance = to_model(layout.cells, ShapeKind::Grid);
  out.target_size = layout.target;
  out.rst_case = layout.rst_case;
  out.case_tag = "grid";
  out.provenance = describe_points(points, budget);
  out.warning = layout.warning;
  return out;
}

ReductionOutput reduce_domset_to_outer_string(const BicoloredGraph& g, int k) {
  const int n = g.size();
  if (k < 1 || k > n) throw InputError("dominating set size must satisfy 1 <= k <= n");
  auto v = [](int i) { return i; };
  auto vp = [n](int i) { return n + i; };
  auto r = [n](int j) { return 2 * n + j; };
  auto b = [n, k](int j) { return 2 * n + k + j; };

  std::vector<Color> colors(static_cast<std::size_t>(3 * n + k));
  for (int i = 0; i < n; ++i) {
    colors[static_cast<std::size_t>(v(i))] = Color::Red;
    colors[static_cast<std::size_t>(vp(i))] = Color::Blue;
    colors[static_cast<std::size_t>(b(i))] = Color::Blue;
  }
  for (int j = 0; j < k; ++j) colors[static_cast<std::size_t>(r(j))] = Color::Red;

  std::vector<Edge> edges;
  for (const auto& [x, y] : g.edges()) {
    edges.emplace_back(v(x), vp(y));
    edges.emplace_back(vp(x), v(y));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(vp(i), vp(j));
    edges.emplace_back(v(i), vp(i));
  }
  for (int j = 0; j + 1 < k; ++j) edges.emplace_back(r(j), r(j + 1));
  for (int j = 0; j + 1 < n; ++j) edges.emplace_back(b(j), b(j + 1));
  edges.emplace_back(b(n - 1), r(k - 1));
  edges.emplace_back(b(0), v(0));

  ReductionOutput out;
  out.instance = BicoloredGraph(std::move(colors), edges);
  out.target_size = 2 * (n + k);
  out.case_tag = "domset";
  out.provenance = "domset n=" + std::to_string(n) + " k=" + std::to_string(k);
  return out;
}

BicoloredGraph reduction_graph(const ReductionOutput& out) {
  if (const auto* g = std::get_if<BicoloredGraph>(&out.instance)) return *g;
  return point_set_graph(std::get<PointSetModel>(out.instance));
}

}  // namespace bcs
