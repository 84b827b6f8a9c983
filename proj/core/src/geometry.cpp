#include "bcs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "bcs/error.hpp"

namespace bcs {
namespace {

constexpr double kContactTolerance = 1e-9;

struct Endpoint {
  double value;
  int kind;  // 0 = left / start, 1 = right / end
  int id;
};

// Ranks endpoints by (value, kind, id) and writes rank into out[id][kind].
std::vector<std::pair<int, int>> rank_endpoints(std::vector<Endpoint> events, std::size_t n) {
  std::sort(events.begin(), events.end(), [](const Endpoint& a, const Endpoint& b) {
    return std::tie(a.value, a.kind, a.id) < std::tie(b.value, b.kind, b.id);
  });
  std::vector<std::pair<int, int>> ranks(n);
  for (std::size_t i = 0; i < events.size(); ++i) {
    auto& slot = ranks[static_cast<std::size_t>(events[i].id)];
    (events[i].kind == 0 ? slot.first : slot.second) = static_cast<int>(i);
  }
  return ranks;
}

std::vector<Color> colors_of(const auto& items) {
  std::vector<Color> colors;
  colors.reserve(items.size());
  for (const auto& item : items) colors.push_back(item.color);
  return colors;
}

void check_distinct_points(const PointSetModel& m) {
  std::set<std::pair<double, double>> seen;
  for (std::size_t i = 0; i < m.items.size(); ++i) {
    const auto& p = m.items[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InputError("point " + std::to_string(i) + " has a non-finite coordinate");
    }
    if (!seen.emplace(p.x, p.y).second) {
      throw InputError("duplicate point at index " + std::to_string(i));
    }
  }
}

template <typename Adjacent>
BicoloredGraph pairwise_graph(const PointSetModel& m, Adjacent adjacent) {
  check_distinct_points(m);
  std::vector<Edge> edges;
  for (int u = 0; u < m.size(); ++u) {
    for (int v = u + 1; v < m.size(); ++v) {
      if (adjacent(m.items[static_cast<std::size_t>(u)], m.items[static_cast<std::size_t>(v)])) {
        edges.emplace_back(u, v);
      }
    }
  }
  return BicoloredGraph(colors_of(m.items), edges);
}

}  // namespace

std::vector<Span> canonical_spans(const IntervalModel& m) {
  std::vector<Endpoint> events;
  events.reserve(2 * m.items.size());
  for (std::size_t i = 0; i < m.items.size(); ++i) {
    const auto& it = m.items[i];
    if (!std::isfinite(it.l) || !std::isfinite(it.r)) {
      throw InputError("interval " + std::to_string(i) + " has a non-finite endpoint");
    }
    if (!(it.l < it.r)) {
      throw InputError("interval " + std::to_string(i) + " has l >= r");
    }
    events.push_back({it.l, 0, static_cast<int>(i)});
    events.push_back({it.r, 1, static_cast<int>(i)});
  }
  const auto ranks = rank_endpoints(std::move(events), m.items.size());
  std::vector<Span> spans;
  spans.reserve(ranks.size());
  for (const auto& [l, r] : ranks) spans.push_back({l, r});
  return spans;
}

CanonicalRing canonical_ring(const CircularArcModel& m) {
  std::vector<Endpoint> events;
  events.reserve(2 * m.items.size());
  for (std::size_t i = 0; i < m.items.size(); ++i) {
    const auto& a = m.items[i];
    if (!std::isfinite(a.start) || !std::isfinite(a.length)) {
      throw InputError("arc " + std::to_string(i) + " has a non-finite value");
    }
    if (a.start < 0.0 || a.start >= 1.0) {
      throw InputError("arc " + std::to_string(i) + " start must lie in [0, 1)");
    }
    if (!(a.length > 0.0) || !(a.length < 1.0)) {
      throw InputError("arc " + std::to_string(i) + " length must lie in (0, 1)");
    }
    double end = a.start + a.length;
    if (end >= 1.0) end -= 1.0;
    events.push_back({a.start, 0, static_cast<int>(i)});
    events.push_back({end, 1, static_cast<int>(i)});
  }
  const auto ranks = rank_endpoints(std::move(events), m.items.size());
  CanonicalRing ring;
  ring.ring = static_cast<int>(2 * m.items.size());
  ring.arcs.reserve(ranks.size());
  for (const auto& [l, r] : ranks) ring.arcs.push_back({l, r});
  return ring;
}

bool ring_covered(const CanonicalRing& ring, std::span<const int> arc_ids) {
  if (ring.ring == 0 || arc_ids.empty()) return false;
  // Difference array over gaps 0..ring-1 (gap p lies between p and p+1).
  std::vector<int> diff(static_cast<std::size_t>(ring.ring) + 1, 0);
  for (int id : arc_ids) {
    const auto& a = ring.arcs[static_cast<std::size_t>(id)];
    const int len = ring.length(a);
    if (a.l + len <= ring.ring) {
      ++diff[static_cast<std::size_t>(a.l)];
      --diff[static_cast<std::size_t>(a.l + len)];
    } else {
      ++diff[static_cast<std::size_t>(a.l)];
      --diff[static_cast<std::size_t>(ring.ring)];
      ++diff[0];
      --diff[static_cast<std::size_t>(a.l + len - ring.ring)];
    }
  }
  int running = 0;
  for (int p = 0; p < ring.ring; ++p) {
    running += diff[static_cast<std::size_t>(p)];
    if (running == 0) return false;
  }
  return true;
}

BicoloredGraph interval_graph(const IntervalModel& m) {
  const auto spans = canonical_spans(m);
  std::vector<int> order(spans.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return spans[static_cast<std::size_t>(a)].l < spans[static_cast<std::size_t>(b)].l;
  });
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Span si = spans[static_cast<std::size_t>(order[i])];
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (spans[static_cast<std::size_t>(order[j])].l > si.r) break;
      edges.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
    }
  }
  return BicoloredGraph(colors_of(m.items), edges);
}

BicoloredGraph circular_arc_graph(const CircularArcModel& m) {
  const auto ring = canonical_ring(m);
  std::vector<Edge> edges;
  for (int u = 0; u < m.size(); ++u) {
    for (int v = u + 1; v < m.size(); ++v) {
      if (ring.overlaps(ring.arcs[static_cast<std::size_t>(u)], ring.arcs[static_cast<std::size_t>(v)])) {
        edges.emplace_back(u, v);
      }
    }
  }
  return BicoloredGraph(colors_of(m.items), edges);
}

void check_permutation_model(const PermutationModel& m) {
  const int n = m.size();
  std::vector<char> top_seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> bottom_seen(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < m.items.size(); ++i) {
    const auto& s = m.items[i];
    if (s.top < 1 || s.top > n || s.bottom < 1 || s.bottom > n) {
      throw InputError("segment " + std::to_string(i) + " position outside 1.." + std::to_string(n));
    }
    if (top_seen[static_cast<std::size_t>(s.top)]++ || bottom_seen[static_cast<std::size_t>(s.bottom)]++) {
      throw InputError("segment " + std::to_string(i) + " repeats a position; not a permutation");
    }
  }
}

BicoloredGraph permutation_graph(const PermutationModel& m) {
  check_permutation_model(m);
  std::vector<Edge> edges;
  for (int u = 0; u < m.size(); ++u) {
    for (int v = u + 1; v < m.size(); ++v) {
      const auto& a = m.items[static_cast<std::size_t>(u)];
      const auto& b = m.items[static_cast<std::size_t>(v)];
      if ((a.top - b.top) * (a.bottom - b.bottom) < 0) edges.emplace_back(u, v);
    }
  }
  return BicoloredGraph(colors_of(m.items), edges);
}

BicoloredGraph unit_disk_graph(const PointSetModel& m) {
  return pairwise_graph(m, [](const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy <= 1.0 + kContactTolerance;
  });
}

BicoloredGraph unit_square_graph(const PointSetModel& m) {
  return pairwise_graph(m, [](const Point& a, const Point& b) {
    // Rotation by -45 degrees followed by scaling with sqrt(2).
    const double du = (a.x + a.y) - (b.x + b.y);
    const double dw = (a.y - a.x) - (b.y - b.x);
    return std::max(std::abs(du), std::abs(dw)) <= 1.0 + kContactTolerance;
  });
}

BicoloredGraph grid_graph(const PointSetModel& m) {
  for (std::size_t i = 0; i < m.items.size(); ++i) {
    const auto& p = m.items[i];
    if (p.x != std::floor(p.x) || p.y != std::floor(p.y)) {
      throw InputError("grid point " + std::to_string(i) + " has a non-integer coordinate");
    }
  }
  return pairwise_graph(m, [](const Point& a, const Point& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1.0;
  });
}

BicoloredGraph point_set_graph(const PointSetModel& m) {
  switch (m.shape) {
    case ShapeKind::UnitDisk:
      return unit_disk_graph(m);
    case ShapeKind::UnitSquare:
      return unit_square_graph(m);
    case ShapeKind::Grid:
      return grid_graph(m);
  }
  throw InputError("unknown shape kind");
}

bool arcs_cover_circle(const CircularArcModel& m) {
  const auto ring = canonical_ring(m);
  std::vector<int> all(ring.arcs.size());
  std::iota(all.begin(), all.end(), 0);
  return ring_covered(ring, all);
}

}  // namespace bcs
