#include "bcs/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "bcs/error.hpp"
#include "bcs/steiner.hpp"

namespace bcs {
namespace {

struct RangeView {
  std::vector<Vertex> ids;    // range members in top order
  std::vector<int> bottom;    // bottom ranks compressed to 0..size-1
};

RangeView view_of(const PermutationModel& m, const std::vector<Vertex>& order, OrderedRange rng) {
  RangeView view;
  view.ids.assign(order.begin() + rng.i, order.begin() + rng.j + 1);
  std::vector<int> raw;
  for (Vertex v : view.ids) raw.push_back(m.items[static_cast<std::size_t>(v)].bottom);
  std::vector<int> sorted = raw;
  std::sort(sorted.begin(), sorted.end());
  for (int b : raw) {
    view.bottom.push_back(
        static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), b) - sorted.begin()));
  }
  return view;
}

// A block is connected iff no proper prefix holds exactly its lowest ranks.
bool block_connected(const std::vector<int>& bottom) {
  int prefix_max = -1;
  for (std::size_t k = 0; k + 1 < bottom.size(); ++k) {
    prefix_max = std::max(prefix_max, bottom[k]);
    if (prefix_max == static_cast<int>(k)) return false;
  }
  return true;
}

void check_range(const PermutationModel& m, OrderedRange rng) {
  if (rng.i < 0 || rng.j >= m.size() || rng.i >= rng.j) {
    throw InputError("ordered range needs 0 <= i < j < n");
  }
}

Solution solve_range(const PermutationModel& m, const BicoloredGraph& g,
                     const std::vector<Vertex>& order, OrderedRange rng) {
  const auto view = view_of(m, order, rng);
  if (!block_connected(view.bottom)) return make_solution(g, {}, kPermutationTag);

  int reds = 0;
  for (Vertex v : view.ids) reds += g.color(v) == Color::Red ? 1 : 0;
  const int blues = static_cast<int>(view.ids.size()) - reds;
  const Color minority = blues <= reds ? Color::Blue : Color::Red;
  const int minority_count = std::min(reds, blues);
  if (minority_count == 0) return make_solution(g, {}, kPermutationTag);

  std::vector<char> terminal(view.ids.size(), 0);
  for (std::size_t k = 0; k < view.ids.size(); ++k) {
    terminal[k] = g.color(view.ids[k]) == minority ? 1 : 0;
  }
  const auto chosen = permutation_steiner_in_top_order(view.bottom, terminal);
  if (!chosen) throw InvariantError("connected range admitted no Steiner tree");

  std::vector<char> in_set(static_cast<std::size_t>(g.size()), 0);
  VertexSet set;
  int majority_used = 0;
  for (int pos : *chosen) {
    const Vertex v = view.ids[static_cast<std::size_t>(pos)];
    in_set[static_cast<std::size_t>(v)] = 1;
    set.push_back(v);
    if (!terminal[static_cast<std::size_t>(pos)]) ++majority_used;
  }
  if (majority_used > minority_count) return make_solution(g, {}, kPermutationTag);

  // All minority segments are already in the set and the range is
  // connected, so some majority segment outside the set always touches it
  // until the range is exhausted.
  while (majority_used < minority_count) {
    Vertex next = -1;
    for (Vertex v : view.ids) {
      if (in_set[static_cast<std::size_t>(v)]) continue;
      const auto nb = g.neighbors(v);
      if (std::any_of(nb.begin(), nb.end(),
                      [&](Vertex w) { return in_set[static_cast<std::size_t>(w)] != 0; })) {
        next = v;
        break;
      }
    }
    if (next < 0) throw InvariantError("no range segment adjacent to the partial solution");
    if (g.color(next) == minority) throw InvariantError("padding reached a minority segment");
    in_set[static_cast<std::size_t>(next)] = 1;
    set.push_back(next);
    ++majority_used;
  }
  std::sort(set.begin(), set.end());
  return make_solution(g, std::move(set), kPermutationTag);
}

}  // namespace

std::vector<Vertex> top_order(const PermutationModel& m) {
  check_permutation_model(m);
  std::vector<Vertex> order(static_cast<std::size_t>(m.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return m.items[static_cast<std::size_t>(a)].top < m.items[static_cast<std::size_t>(b)].top;
  });
  return order;
}

bool range_connected(const PermutationModel& m, OrderedRange rng) {
  check_range(m, rng);
  return block_connected(view_of(m, top_order(m), rng).bottom);
}

Solution bcs_range(const PermutationModel& m, const BicoloredGraph& g, OrderedRange rng) {
  if (g.size() != m.size()) throw InputError("graph does not match the permutation model");
  check_range(m, rng);
  return solve_range(m, g, top_order(m), rng);
}

Solution bcs_permutation(const PermutationModel& m) {
  const auto g = permutation_graph(m);
  const auto order = top_order(m);
  const int n = m.size();

  // Prefix color counts in top order bound each range before solving it.
  std::vector<int> red_prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n; ++k) {
    red_prefix[static_cast<std::size_t>(k) + 1] =
        red_prefix[static_cast<std::size_t>(k)] +
        (g.color(order[static_cast<std::size_t>(k)]) == Color::Red ? 1 : 0);
  }
  Solution best = make_solution(g, {}, kPermutationTag);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int reds = red_prefix[static_cast<std::size_t>(j) + 1] - red_prefix[static_cast<std::size_t>(i)];
      const int bound = 2 * std::min(reds, j - i + 1 - reds);
      if (bound <= best.size()) continue;
      auto found = solve_range(m, g, order, {i, j});
      if (found.size() > best.size()) best = std::move(found);
    }
  }
  return best;
}

}  // namespace bcs
