#include "bcs/steiner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "bcs/error.hpp"

namespace bcs {
namespace {

std::vector<char> terminal_flags(const BicoloredGraph& g, std::span<const Vertex> terminals) {
  if (terminals.empty()) throw InputError("terminal set must be nonempty");
  check_vertex_set(g, terminals);
  std::vector<char> flag(static_cast<std::size_t>(g.size()), 0);
  for (Vertex t : terminals) flag[static_cast<std::size_t>(t)] = 1;
  return flag;
}

struct Component {
  int rightmost;  // member with the largest right endpoint
};

// Components of a set of spans sorted by left endpoint, left to right.
std::vector<Component> sweep_components(std::span<const Span> spans, std::span<const int> sorted) {
  std::vector<Component> comps;
  int reach = std::numeric_limits<int>::min();
  for (int id : sorted) {
    const Span s = spans[static_cast<std::size_t>(id)];
    if (comps.empty() || s.l > reach) {
      comps.push_back({id});
      reach = s.r;
    } else if (s.r > reach) {
      comps.back().rightmost = id;
      reach = s.r;
    }
  }
  return comps;
}

}  // namespace

SteinerResult greedy_interval_steiner(std::span<const Span> spans, std::span<const int> members,
                                      std::span<const char> is_terminal, SteinerTrace* trace) {
  auto by_left = [&](int a, int b) {
    return spans[static_cast<std::size_t>(a)].l < spans[static_cast<std::size_t>(b)].l;
  };
  std::vector<int> chosen;
  std::vector<int> pool;
  for (int id : members) {
    (is_terminal[static_cast<std::size_t>(id)] ? chosen : pool).push_back(id);
  }
  std::sort(chosen.begin(), chosen.end(), by_left);
  std::vector<char> used(spans.size(), 0);

  SteinerResult result;
  while (true) {
    const auto comps = sweep_components(spans, chosen);
    if (comps.size() <= 1) break;
    const Span anchor = spans[static_cast<std::size_t>(comps.front().rightmost)];
    if (trace) {
      trace->components_before_step.push_back(static_cast<int>(comps.size()));
      trace->anchor_reach_before_step.push_back(anchor.r);
    }
    int best = -1;
    for (int id : pool) {
      if (used[static_cast<std::size_t>(id)]) continue;
      const Span s = spans[static_cast<std::size_t>(id)];
      if (overlaps(s, anchor) && (best < 0 || s.r > spans[static_cast<std::size_t>(best)].r)) {
        best = id;
      }
    }
    if (best < 0 || spans[static_cast<std::size_t>(best)].r <= anchor.r) return result;
    used[static_cast<std::size_t>(best)] = 1;
    result.steiner_vertices.push_back(best);
    chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), best, by_left), best);
  }
  result.connected = true;
  return result;
}

SteinerResult select_steiners_interval(const IntervalModel& m, const BicoloredGraph& g,
                                       std::span<const Vertex> terminals, SteinerTrace* trace) {
  if (g.size() != m.size()) throw InputError("graph does not match the interval model");
  const auto flags = terminal_flags(g, terminals);
  const auto spans = canonical_spans(m);
  std::vector<int> members(spans.size());
  std::iota(members.begin(), members.end(), 0);
  auto result = greedy_interval_steiner(spans, members, flags, trace);
  if (!result.connected) {
    throw InputError("disconnected substrate: no interval reaches past the leftmost component");
  }
  std::sort(result.steiner_vertices.begin(), result.steiner_vertices.end());
  return result;
}

std::optional<std::vector<int>> permutation_steiner_in_top_order(
    std::span<const int> bottom_rank, std::span<const char> terminal_in_order) {
  const int n = static_cast<int>(bottom_rank.size());
  int first_terminal = -1;
  int last_terminal = -1;
  for (int i = 0; i < n; ++i) {
    if (terminal_in_order[static_cast<std::size_t>(i)]) {
      if (first_terminal < 0) first_terminal = i;
      last_terminal = i;
    }
  }
  if (first_terminal < 0) return std::vector<int>{};

  // next_terminal[i] = first terminal position strictly after i (n if none).
  std::vector<int> next_terminal(static_cast<std::size_t>(n), n);
  for (int i = n - 1, upcoming = n; i >= 0; --i) {
    next_terminal[static_cast<std::size_t>(i)] = upcoming;
    if (terminal_in_order[static_cast<std::size_t>(i)]) upcoming = i;
  }

  const int none = n;  // "no open cut"
  const std::size_t states = static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                             static_cast<std::size_t>(n + 1);
  auto index = [n](int last, int max_bottom, int pending) {
    return (static_cast<std::size_t>(last) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(max_bottom)) *
               static_cast<std::size_t>(n + 1) +
           static_cast<std::size_t>(pending);
  };
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> cost(states, kInf);
  std::vector<std::int64_t> parent(states, -1);
  auto weight = [&](int i) { return terminal_in_order[static_cast<std::size_t>(i)] ? 0 : 1; };

  for (int j = 0; j <= first_terminal; ++j) {
    cost[index(j, bottom_rank[static_cast<std::size_t>(j)], none)] = weight(j);
  }

  int best_cost = kInf;
  std::size_t best_state = 0;
  for (int last = 0; last < n; ++last) {
    const int limit = std::min(next_terminal[static_cast<std::size_t>(last)], n - 1);
    for (int max_bottom = 0; max_bottom < n; ++max_bottom) {
      for (int pending = 0; pending <= n; ++pending) {
        const std::size_t here = index(last, max_bottom, pending);
        const int c = cost[here];
        if (c == kInf) continue;
        if (pending == none && last >= last_terminal && c < best_cost) {
          best_cost = c;
          best_state = here;
        }
        const int open = pending == none ? max_bottom : pending;
        for (int j = last + 1; j <= limit; ++j) {
          const int b = bottom_rank[static_cast<std::size_t>(j)];
          const int next_pending = b < open ? none : open;
          const std::size_t there = index(j, std::max(max_bottom, b), next_pending);
          const int nc = c + weight(j);
          if (nc < cost[there]) {
            cost[there] = nc;
            parent[there] = static_cast<std::int64_t>(here);
          }
        }
      }
    }
  }
  if (best_cost == kInf) return std::nullopt;

  std::vector<int> chosen;
  const std::size_t per_last = static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1);
  for (std::int64_t s = static_cast<std::int64_t>(best_state); s >= 0;
       s = parent[static_cast<std::size_t>(s)]) {
    chosen.push_back(static_cast<int>(static_cast<std::size_t>(s) / per_last));
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

SteinerResult steiner_permutation(const PermutationModel& m, const BicoloredGraph& g,
                                  std::span<const Vertex> terminals) {
  if (g.size() != m.size()) throw InputError("graph does not match the permutation model");
  check_permutation_model(m);
  const auto flags = terminal_flags(g, terminals);
  if (count_components(g) != 1) throw InputError("permutation graph is disconnected");

  std::vector<int> by_top(static_cast<std::size_t>(m.size()));
  std::iota(by_top.begin(), by_top.end(), 0);
  std::sort(by_top.begin(), by_top.end(), [&](int a, int b) {
    return m.items[static_cast<std::size_t>(a)].top < m.items[static_cast<std::size_t>(b)].top;
  });
  std::vector<int> bottom(by_top.size());
  std::vector<char> terminal(by_top.size());
  for (std::size_t i = 0; i < by_top.size(); ++i) {
    bottom[i] = m.items[static_cast<std::size_t>(by_top[i])].bottom - 1;
    terminal[i] = flags[static_cast<std::size_t>(by_top[i])];
  }
  const auto chosen = permutation_steiner_in_top_order(bottom, terminal);
  if (!chosen) throw InvariantError("connected permutation graph admitted no Steiner tree");
  SteinerResult result;
  result.connected = true;
  for (int pos : *chosen) {
    if (!terminal[static_cast<std::size_t>(pos)]) {
      result.steiner_vertices.push_back(by_top[static_cast<std::size_t>(pos)]);
    }
  }
  std::sort(result.steiner_vertices.begin(), result.steiner_vertices.end());
  return result;
}

namespace {

using Mask = std::uint64_t;

bool mask_connected(std::span<const Mask> adj, Mask set) {
  if (set == 0) return false;
  Mask seen = set & (~set + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

std::vector<Mask> adjacency_masks(const BicoloredGraph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= Mask{1} << w;
  }
  return adj;
}

}  // namespace

SteinerResult steiner_exact_oracle(const BicoloredGraph& g, std::span<const Vertex> terminals,
                                   SteinerOracleLimits limits) {
  if (g.size() > limits.max_vertices || g.size() > 64) {
    throw CapacityError("steiner oracle limited to " + std::to_string(limits.max_vertices) +
                        " vertices, got " + std::to_string(g.size()));
  }
  const auto flags = terminal_flags(g, terminals);
  const auto adj = adjacency_masks(g);
  Mask base = 0;
  std::vector<int> free;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (flags[static_cast<std::size_t>(v)]) {
      base |= Mask{1} << v;
    } else {
      free.push_back(v);
    }
  }
  SteinerResult result;
  if (mask_connected(adj, base)) {
    result.connected = true;
    return result;
  }
  const int f = static_cast<int>(free.size());
  std::vector<int> pick;
  // Lexicographic k-combinations of free vertices, k = 1, 2, ...
  std::function<bool(int, int, Mask)> search = [&](int start, int remaining, Mask set) {
    if (remaining == 0) return mask_connected(adj, set);
    for (int i = start; i <= f - remaining; ++i) {
      pick.push_back(free[static_cast<std::size_t>(i)]);
      if (search(i + 1, remaining - 1, set | (Mask{1} << free[static_cast<std::size_t>(i)]))) {
        return true;
      }
      pick.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= f; ++k) {
    pick.clear();
    if (search(0, k, base)) {
      result.steiner_vertices = pick;
      result.connected = true;
      return result;
    }
  }
  return result;
}

std::optional<int> steiner_terminal_dp_size(const BicoloredGraph& g,
                                            std::span<const Vertex> terminals) {
  const auto flags = terminal_flags(g, terminals);
  std::vector<Vertex> term(terminals.begin(), terminals.end());
  const int t = static_cast<int>(term.size());
  if (t > 14) throw CapacityError("terminal DP limited to 14 terminals");
  const int n = g.size();
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  auto weight = [&](Vertex v) { return flags[static_cast<std::size_t>(v)] ? 0 : 1; };
  const std::size_t full = (std::size_t{1} << t) - 1;
  // dp[mask][v]: fewest non-terminals in a connected set containing the
  // terminals of mask and v (v counted).
  std::vector<std::vector<int>> dp(full + 1, std::vector<int>(static_cast<std::size_t>(n), kInf));

  auto relax = [&](std::vector<int>& d) {
    using Item = std::pair<int, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (Vertex v = 0; v < n; ++v) {
      if (d[static_cast<std::size_t>(v)] < kInf) queue.emplace(d[static_cast<std::size_t>(v)], v);
    }
    while (!queue.empty()) {
      auto [dist, v] = queue.top();
      queue.pop();
      if (dist != d[static_cast<std::size_t>(v)]) continue;
      for (Vertex w : g.neighbors(v)) {
        const int nd = dist + weight(w);
        if (nd < d[static_cast<std::size_t>(w)]) {
          d[static_cast<std::size_t>(w)] = nd;
          queue.emplace(nd, w);
        }
      }
    }
  };

  for (int i = 0; i < t; ++i) {
    auto& d = dp[std::size_t{1} << i];
    d[static_cast<std::size_t>(term[static_cast<std::size_t>(i)])] = 0;
    relax(d);
  }
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (std::has_single_bit(mask)) continue;
    auto& d = dp[mask];
    const std::size_t low = mask & (~mask + 1);
    for (std::size_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;
      const auto& a = dp[sub];
      const auto& b = dp[mask ^ sub];
      for (Vertex v = 0; v < n; ++v) {
        const auto vi = static_cast<std::size_t>(v);
        if (a[vi] >= kInf || b[vi] >= kInf) continue;
        d[vi] = std::min(d[vi], a[vi] + b[vi] - weight(v));
      }
    }
    relax(d);
  }
  const int best = *std::min_element(dp[full].begin(), dp[full].end());
  if (best >= kInf) return std::nullopt;
  return best;
}

}  // namespace bcs
