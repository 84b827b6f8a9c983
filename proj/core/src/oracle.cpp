#include "bcs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bcs/error.hpp"
#include "bcs/steiner.hpp"

namespace bcs {
namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

void check_cap(const BicoloredGraph& g, const OracleBudget& budget) {
  if (g.size() > budget.max_vertices || g.size() > 64) {
    throw CapacityError("oracle limited to " + std::to_string(std::min(budget.max_vertices, 64)) +
                        " vertices, got " + std::to_string(g.size()));
  }
}

struct Enumerator {
  std::vector<Mask> adj;
  int max_size = 0;
  const std::function<bool(Mask)>* visit = nullptr;

  // Returns true when the visitor asked to stop.
  bool extend(Mask sub, Mask closed, Mask ext, Mask above, int size) const {
    if ((*visit)(sub)) return true;
    if (size == max_size) return false;
    while (ext != 0) {
      const int w = std::countr_zero(ext);
      ext &= ext - 1;
      const Mask fresh = adj[static_cast<std::size_t>(w)] & ~closed & above;
      if (extend(sub | bit(w), closed | adj[static_cast<std::size_t>(w)] | bit(w), ext | fresh,
                 above, size + 1)) {
        return true;
      }
    }
    return false;
  }
};

Mask red_mask(const BicoloredGraph& g) {
  Mask m = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.color(v) == Color::Red) m |= bit(v);
  }
  return m;
}

VertexSet to_set(Mask m) {
  VertexSet s;
  while (m != 0) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

}  // namespace

void for_each_connected_subset(const BicoloredGraph& g, int max_size,
                               const std::function<bool(std::uint64_t)>& visit) {
  if (g.size() > 64) throw CapacityError("subset enumeration needs n <= 64");
  Enumerator e;
  e.max_size = std::min(max_size, g.size());
  e.visit = &visit;
  e.adj.resize(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex u : g.neighbors(v)) e.adj[static_cast<std::size_t>(v)] |= bit(u);
  }
  if (e.max_size < 1) return;
  for (Vertex v = 0; v < g.size(); ++v) {
    const Mask above = v == 63 ? 0 : ~Mask{0} << (v + 1);
    const Mask nb = e.adj[static_cast<std::size_t>(v)];
    if (e.extend(bit(v), nb | bit(v), nb & above, above, 1)) return;
  }
}

Solution bcs_oracle(const BicoloredGraph& g, OracleBudget budget) {
  check_cap(g, budget);
  const Mask reds = red_mask(g);
  const int bound = balance_upper_bound(g);
  Mask best = 0;
  int best_size = 0;
  for_each_connected_subset(g, bound, [&](Mask s) {
    const int size = std::popcount(s);
    if (size > best_size && 2 * std::popcount(s & reds) == size) {
      best = s;
      best_size = size;
    }
    return best_size == bound;
  });
  return make_solution(g, to_set(best), kOracleTag);
}

bool bcs_oracle_reaches(const BicoloredGraph& g, int target, OracleBudget budget) {
  check_cap(g, budget);
  if (target <= 0) return true;
  if (target > balance_upper_bound(g)) return false;
  const Mask reds = red_mask(g);
  bool found = false;
  for_each_connected_subset(g, balance_upper_bound(g), [&](Mask s) {
    const int size = std::popcount(s);
    found = size >= target && 2 * std::popcount(s & reds) == size;
    return found;
  });
  return found;
}

bool k_bcs_oracle(const BicoloredGraph& g, int k, OracleBudget budget) {
  check_cap(g, budget);
  if (k == 0) return true;
  if (k < 0 || k % 2 != 0 || k > balance_upper_bound(g)) return false;
  const Mask reds = red_mask(g);
  bool found = false;
  for_each_connected_subset(g, k, [&](Mask s) {
    found = std::popcount(s) == k && 2 * std::popcount(s & reds) == k;
    return found;
  });
  return found;
}

int rst_oracle(std::span<const GridPoint> points) {
  if (points.empty()) throw InputError("rectilinear Steiner tree needs at least one point");
  std::vector<GridPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() > 5) throw CapacityError("rectilinear Steiner oracle limited to 5 points");
  int x0 = pts.front().first, x1 = x0, y0 = pts.front().second, y1 = y0;
  for (const auto& [x, y] : pts) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  if (x1 - x0 > 6 || y1 - y0 > 6) {
    throw CapacityError("rectilinear Steiner oracle limited to a coordinate spread of 6");
  }
  const int w = x1 - x0 + 1;
  const int h = y1 - y0 + 1;
  auto id = [&](int x, int y) { return (y - y0) * w + (x - x0); };
  std::vector<Edge> edges;
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      if (x < x1) edges.emplace_back(id(x, y), id(x + 1, y));
      if (y < y1) edges.emplace_back(id(x, y), id(x, y + 1));
    }
  }
  const BicoloredGraph grid(std::vector<Color>(static_cast<std::size_t>(w * h), Color::Red), edges);
  VertexSet terminals;
  for (const auto& [x, y] : pts) terminals.push_back(id(x, y));
  const auto steiner = steiner_terminal_dp_size(grid, terminals);
  if (!steiner) throw InvariantError("grid box is connected");
  // A tree on |T| + |D| grid vertices has one edge fewer.
  return static_cast<int>(terminals.size()) + *steiner - 1;
}

bool dominating_set_oracle(const BicoloredGraph& g, int k) {
  if (k < 0) throw InputError("dominating set size must be non-negative");
  if (g.size() > 12) throw CapacityError("dominating set oracle limited to 12 vertices");
  const int n = g.size();
  const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<Mask> closed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) {
    closed[static_cast<std::size_t>(v)] = bit(v);
    for (Vertex u : g.neighbors(v)) closed[static_cast<std::size_t>(v)] |= bit(u);
  }
  for (Mask u = 0; u <= all; ++u) {
    if (std::popcount(u) > k) continue;
    Mask covered = 0;
    for (Mask rest = u; rest != 0; rest &= rest - 1) {
      covered |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    if (covered == all) return true;
  }
  return false;
}

}  // namespace bcs
