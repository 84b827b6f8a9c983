#include "bcs/interval.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bcs/error.hpp"
#include "bcs/steiner.hpp"

namespace bcs {

WindowIndex::WindowIndex(std::span<const Span> spans) : spans_(spans.begin(), spans.end()) {
  by_left_.resize(spans_.size());
  std::iota(by_left_.begin(), by_left_.end(), 0);
  std::sort(by_left_.begin(), by_left_.end(), [&](int a, int b) {
    return spans_[static_cast<std::size_t>(a)].l < spans_[static_cast<std::size_t>(b)].l;
  });
  lefts_.reserve(by_left_.size());
  for (int id : by_left_) lefts_.push_back(spans_[static_cast<std::size_t>(id)].l);
  if (!by_left_.empty()) {
    tree_.resize(4 * by_left_.size());
    build(1, 0, by_left_.size());
  }
}

void WindowIndex::build(std::size_t node, std::size_t begin, std::size_t end) {
  auto& ids = tree_[node];
  ids.assign(by_left_.begin() + static_cast<std::ptrdiff_t>(begin),
             by_left_.begin() + static_cast<std::ptrdiff_t>(end));
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return spans_[static_cast<std::size_t>(a)].r < spans_[static_cast<std::size_t>(b)].r;
  });
  if (end - begin > 1) {
    const std::size_t mid = begin + (end - begin) / 2;
    build(2 * node, begin, mid);
    build(2 * node + 1, mid, end);
  }
}

void WindowIndex::collect(std::size_t node, std::size_t begin, std::size_t end, std::size_t from,
                          int hi, std::vector<int>& out) const {
  if (end <= from) return;
  if (begin >= from) {
    const auto& ids = tree_[node];
    for (int id : ids) {
      if (spans_[static_cast<std::size_t>(id)].r > hi) break;
      out.push_back(id);
    }
    return;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  collect(2 * node, begin, mid, from, hi, out);
  collect(2 * node + 1, mid, end, from, hi, out);
}

void WindowIndex::collect(int lo, int hi, std::vector<int>& out) const {
  if (by_left_.empty()) return;
  const auto from = static_cast<std::size_t>(std::lower_bound(lefts_.begin(), lefts_.end(), lo) -
                                             lefts_.begin());
  collect(1, 0, by_left_.size(), from, hi, out);
}

VertexSet window_members(std::span<const Span> spans, const WindowIndex& index, int u, int v) {
  VertexSet members;
  index.collect(spans[static_cast<std::size_t>(u)].l, spans[static_cast<std::size_t>(v)].r, members);
  members.push_back(u);
  members.push_back(v);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

VertexSet solve_window(std::span<const Span> spans, std::span<const Color> colors, int u, int v,
                       std::span<const int> members) {
  auto span_of = [&](int id) { return spans[static_cast<std::size_t>(id)]; };
  auto color_of = [&](int id) { return colors[static_cast<std::size_t>(id)]; };

  std::vector<int> by_left(members.begin(), members.end());
  std::sort(by_left.begin(), by_left.end(), [&](int a, int b) { return span_of(a).l < span_of(b).l; });
  int reach = 0;
  for (std::size_t i = 0; i < by_left.size(); ++i) {
    const Span s = span_of(by_left[i]);
    if (i > 0 && s.l > reach) return {};  // window disconnected
    reach = i == 0 ? s.r : std::max(reach, s.r);
  }

  int reds = 0;
  for (int id : members) reds += color_of(id) == Color::Red ? 1 : 0;
  const int blues = static_cast<int>(members.size()) - reds;
  // Terminal color is the window minority; blue on ties.
  const Color minority = blues <= reds ? Color::Blue : Color::Red;
  const int minority_count = std::min(reds, blues);
  if (minority_count == 0) return {};

  std::vector<char> terminal(spans.size(), 0);
  for (int id : members) {
    if (color_of(id) == minority) terminal[static_cast<std::size_t>(id)] = 1;
  }
  terminal[static_cast<std::size_t>(u)] = 1;
  terminal[static_cast<std::size_t>(v)] = 1;

  const auto steiner = greedy_interval_steiner(spans, members, terminal);
  if (!steiner.connected) return {};

  VertexSet chosen;
  std::vector<char> in_set(spans.size(), 0);
  int majority_used = 0;
  auto take = [&](int id) {
    if (in_set[static_cast<std::size_t>(id)]) return;
    in_set[static_cast<std::size_t>(id)] = 1;
    chosen.push_back(id);
    if (color_of(id) != minority) ++majority_used;
  };
  for (int id : members) {
    if (terminal[static_cast<std::size_t>(id)]) take(id);
  }
  for (int id : steiner.steiner_vertices) take(id);
  if (majority_used > minority_count) return {};

  // A connected set holding u and v covers [l_u, r_v], so every remaining
  // window interval touches it.
  int lo = span_of(chosen.front()).l;
  int hi = span_of(chosen.front()).r;
  for (int id : chosen) {
    lo = std::min(lo, span_of(id).l);
    hi = std::max(hi, span_of(id).r);
  }
  for (int id : by_left) {
    if (majority_used == minority_count) break;
    if (in_set[static_cast<std::size_t>(id)] || color_of(id) == minority) continue;
    const Span s = span_of(id);
    if (!overlaps(s, Span{lo, hi})) {
      throw InvariantError("padding interval does not touch the partial solution");
    }
    take(id);
    lo = std::min(lo, s.l);
    hi = std::max(hi, s.r);
  }
  if (majority_used != minority_count) {
    throw InvariantError("window ran out of majority-color intervals while padding");
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

VertexSet solve_interval_instance(std::span<const Span> spans, std::span<const Color> colors) {
  const WindowIndex index(spans);
  const int n = static_cast<int>(spans.size());
  VertexSet best;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (spans[static_cast<std::size_t>(v)].l < spans[static_cast<std::size_t>(u)].l) continue;
      const auto members = window_members(spans, index, u, v);
      int reds = 0;
      for (int id : members) reds += colors[static_cast<std::size_t>(id)] == Color::Red ? 1 : 0;
      const int bound = 2 * std::min(reds, static_cast<int>(members.size()) - reds);
      if (bound <= static_cast<int>(best.size())) continue;
      auto found = solve_window(spans, colors, u, v, members);
      if (found.size() > best.size()) best = std::move(found);
    }
  }
  return best;
}

Window candidate_window(const IntervalModel& m, Vertex u, Vertex v) {
  if (u < 0 || u >= m.size() || v < 0 || v >= m.size()) throw InputError("window vertex out of range");
  const auto spans = canonical_spans(m);
  if (spans[static_cast<std::size_t>(u)].l > spans[static_cast<std::size_t>(v)].l) {
    throw InputError("candidate window requires l_u <= l_v");
  }
  const WindowIndex index(spans);
  return {u, v, window_members(spans, index, u, v)};
}

Solution bcs_window(const IntervalModel& m, const BicoloredGraph& g, const Window& w) {
  if (g.size() != m.size()) throw InputError("graph does not match the interval model");
  check_vertex_set(g, w.members);
  const auto spans = canonical_spans(m);
  std::vector<Color> colors;
  for (const auto& it : m.items) colors.push_back(it.color);
  return make_solution(g, solve_window(spans, colors, w.u, w.v, w.members), kIntervalTag);
}

Solution bcs_interval(const IntervalModel& m) {
  const auto g = interval_graph(m);
  const auto spans = canonical_spans(m);
  return make_solution(g, solve_interval_instance(spans, g.colors()), kIntervalTag);
}

}  // namespace bcs
