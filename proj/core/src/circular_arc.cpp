#include "bcs/circular_arc.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "bcs/error.hpp"
#include "bcs/interval.hpp"
#include "bcs/steiner.hpp"

namespace bcs {
namespace {

Color minority_color(const BicoloredGraph& g) {
  return g.count(Color::Blue) <= g.count(Color::Red) ? Color::Blue : Color::Red;
}

// Adds majority-color vertices adjacent to the current set, smallest id
// first, until both colors are even. Returns an empty set when the supply
// runs out; on a covering model the graph is connected, so that is a bug.
VertexSet pad_majority(const BicoloredGraph& g, VertexSet set, Color minority, bool covering) {
  std::vector<char> in_set(static_cast<std::size_t>(g.size()), 0);
  int minority_count = 0;
  int majority_count = 0;
  for (Vertex v : set) {
    in_set[static_cast<std::size_t>(v)] = 1;
    (g.color(v) == minority ? minority_count : majority_count) += 1;
  }
  while (majority_count < minority_count) {
    Vertex next = -1;
    for (Vertex w = 0; w < g.size() && next < 0; ++w) {
      if (in_set[static_cast<std::size_t>(w)] || g.color(w) == minority) continue;
      for (Vertex x : g.neighbors(w)) {
        if (in_set[static_cast<std::size_t>(x)]) {
          next = w;
          break;
        }
      }
    }
    if (next < 0) {
      if (covering) throw InvariantError("covering model ran out of padding arcs");
      return {};
    }
    in_set[static_cast<std::size_t>(next)] = 1;
    set.push_back(next);
    ++majority_count;
  }
  std::sort(set.begin(), set.end());
  return set;
}

// Ordered pairs (u, v) in id order, u == v included, that fit their window.
template <typename Visit>
void for_each_window(const CanonicalRing& ring, Visit&& visit) {
  const int n = static_cast<int>(ring.arcs.size());
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      auto w = arc_window(ring, u, v);
      if (w) visit(*w);
    }
  }
}

// Sparse span table addressed by arc id; only window members are filled.
std::vector<Span> spans_by_id(int n, const ArcWindow& w) {
  std::vector<Span> spans(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < w.members.size(); ++i) {
    spans[static_cast<std::size_t>(w.members[i])] = w.cut[i];
  }
  return spans;
}

std::vector<int> minority_arcs(const BicoloredGraph& g, Color minority) {
  std::vector<int> ids;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.color(v) == minority) ids.push_back(v);
  }
  return ids;
}

// Components of the minority arcs in the compiled graph, each sorted,
// ordered by smallest member.
std::vector<std::vector<int>> terminal_components(const BicoloredGraph& g,
                                                  std::span<const int> terminals) {
  const auto sub = induced_subgraph(g, terminals);
  const auto labels = component_labels(sub.graph);
  int count = 0;
  for (int l : labels) count = std::max(count, l + 1);
  std::vector<std::vector<int>> comps(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    comps[static_cast<std::size_t>(labels[i])].push_back(sub.original[i]);
  }
  return comps;
}

// Union of arcs whose union is contiguous; nullopt when it is the whole ring.
std::optional<RingArc> union_arc(const CanonicalRing& ring, std::span<const int> ids) {
  const int n = ring.ring;
  std::vector<int> diff(static_cast<std::size_t>(n) + 1, 0);
  for (int id : ids) {
    const RingArc a = ring.arcs[static_cast<std::size_t>(id)];
    const int len = ring.length(a);
    if (a.l + len <= n) {
      diff[static_cast<std::size_t>(a.l)] += 1;
      diff[static_cast<std::size_t>(a.l + len)] -= 1;
    } else {
      diff[static_cast<std::size_t>(a.l)] += 1;
      diff[static_cast<std::size_t>(n)] -= 1;
      diff[0] += 1;
      diff[static_cast<std::size_t>(a.l + len - n)] -= 1;
    }
  }
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  int run = 0;
  int open_gap = -1;
  for (int p = 0; p < n; ++p) {
    run += diff[static_cast<std::size_t>(p)];
    covered[static_cast<std::size_t>(p)] = run > 0 ? 1 : 0;
    if (run == 0 && open_gap < 0) open_gap = p;
  }
  if (open_gap < 0) return std::nullopt;
  int start = -1;
  int last = -1;
  for (int step = 1; step <= n; ++step) {
    const int p = (open_gap + step) % n;
    if (covered[static_cast<std::size_t>(p)]) {
      if (start < 0) start = p;
      last = p;
    } else if (start >= 0) {
      break;
    }
  }
  if (start < 0) throw InvariantError("union of an empty arc set");
  return RingArc{start, (last + 1) % n};
}

struct CoveringSearch {
  int best_size = std::numeric_limits<int>::max();
  VertexSet best_steiner;
  std::vector<std::optional<int>> per_component;
};

CoveringSearch search_covering(const CanonicalRing& ring, const BicoloredGraph& g, Color minority) {
  CoveringSearch out;
  const auto terminals = minority_arcs(g, minority);
  if (terminals.empty()) return out;
  const auto comps = terminal_components(g, terminals);
  if (comps.size() == 1) {
    if (ring_covered(ring, comps.front())) out.best_size = 0;
    return out;
  }
  std::vector<char> is_terminal(static_cast<std::size_t>(g.size()), 0);
  for (int t : terminals) is_terminal[static_cast<std::size_t>(t)] = 1;

  out.per_component.resize(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& comp = comps[c];
    std::vector<char> in_neighborhood(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> neighborhood;
    for (int t : comp) {
      for (Vertex w : g.neighbors(t)) {
        if (is_terminal[static_cast<std::size_t>(w)] || in_neighborhood[static_cast<std::size_t>(w)]) {
          continue;
        }
        in_neighborhood[static_cast<std::size_t>(w)] = 1;
        neighborhood.push_back(w);
      }
    }
    std::sort(neighborhood.begin(), neighborhood.end());

    std::optional<int> comp_best;
    for (std::size_t i = 0; i < neighborhood.size(); ++i) {
      for (std::size_t j = i; j < neighborhood.size(); ++j) {
        const Vertex left = neighborhood[i];
        const Vertex right = neighborhood[j];
        VertexSet steiner{left};
        if (right != left) steiner.push_back(right);

        const auto inst = splice_component(ring, g.colors(), is_terminal, comp, in_neighborhood,
                                           left, right);
        if (inst) {
          std::vector<int> members(inst->spans.size());
          std::iota(members.begin(), members.end(), 0);
          const auto sel = greedy_interval_steiner(inst->spans, members, inst->terminal);
          if (!sel.connected) continue;
          for (int local : sel.steiner_vertices) {
            steiner.push_back(inst->original[static_cast<std::size_t>(local)]);
          }
        }
        VertexSet all(terminals.begin(), terminals.end());
        all.insert(all.end(), steiner.begin(), steiner.end());
        if (!is_connected(g, all)) {
          throw InvariantError("spliced Steiner selection left the terminals disconnected");
        }
        const int size = static_cast<int>(steiner.size());
        if (!comp_best || size < *comp_best) comp_best = size;
        if (size < out.best_size) {
          out.best_size = size;
          std::sort(steiner.begin(), steiner.end());
          out.best_steiner = steiner;
        }
      }
    }
    out.per_component[c] = comp_best;
  }
  return out;
}

// Fewest Steiner arcs over windows holding every minority arc.
std::optional<VertexSet> search_windows(const CanonicalRing& ring, const BicoloredGraph& g,
                                        Color minority) {
  const auto terminals = minority_arcs(g, minority);
  if (terminals.empty()) return std::nullopt;
  std::vector<char> is_terminal(static_cast<std::size_t>(g.size()), 0);
  for (int t : terminals) is_terminal[static_cast<std::size_t>(t)] = 1;
  std::optional<VertexSet> best;
  for_each_window(ring, [&](const ArcWindow& w) {
    int held = 0;
    for (int id : w.members) held += is_terminal[static_cast<std::size_t>(id)];
    if (held != static_cast<int>(terminals.size())) return;
    const auto spans = spans_by_id(g.size(), w);
    auto sel = greedy_interval_steiner(spans, w.members, is_terminal);
    if (!sel.connected) return;
    if (!best || sel.steiner_vertices.size() < best->size()) best = std::move(sel.steiner_vertices);
  });
  return best;
}

Solution finish_with_padding(const BicoloredGraph& g, Color minority, const VertexSet& steiner,
                             const char* tag) {
  const auto terminals = minority_arcs(g, minority);
  VertexSet set(terminals.begin(), terminals.end());
  set.insert(set.end(), steiner.begin(), steiner.end());
  std::sort(set.begin(), set.end());
  return make_solution(g, pad_majority(g, std::move(set), minority, true), tag);
}

}  // namespace

std::optional<ArcWindow> arc_window(const CanonicalRing& ring, Vertex u, Vertex v) {
  const auto& arcs = ring.arcs;
  const RingArc au = arcs[static_cast<std::size_t>(u)];
  const RingArc av = arcs[static_cast<std::size_t>(v)];
  const int origin = av.l;
  const int end = ring.offset(origin, au.r);
  auto fits = [&](const RingArc& a) {
    const int lo = ring.offset(origin, a.l);
    const int hi = ring.offset(origin, a.r);
    return lo < hi && hi <= end;
  };
  if (!fits(au) || !fits(av)) return std::nullopt;
  ArcWindow w{u, v, {}, {}};
  for (int id = 0; id < static_cast<int>(arcs.size()); ++id) {
    const RingArc a = arcs[static_cast<std::size_t>(id)];
    if (!fits(a)) continue;
    w.members.push_back(id);
    w.cut.push_back(Span{ring.offset(origin, a.l), ring.offset(origin, a.r)});
  }
  return w;
}

std::optional<SplicedInstance> splice_component(const CanonicalRing& ring,
                                                std::span<const Color> colors,
                                                std::span<const char> is_terminal,
                                                std::span<const int> component_arcs,
                                                std::span<const char> in_neighborhood,
                                                Vertex left, Vertex right) {
  std::vector<int> committed(component_arcs.begin(), component_arcs.end());
  committed.push_back(left);
  committed.push_back(right);
  const auto reach = union_arc(ring, committed);
  if (!reach) return std::nullopt;
  const auto core = union_arc(ring, component_arcs);
  if (!core) throw InvariantError("a single terminal component cannot be spliced if it covers");

  // Doubled coordinates put the cut strictly between two ring positions
  // inside the component, away from every surviving arc.
  const int n2 = 2 * ring.ring;
  const int cut = 2 * core->l + 1;
  auto lin = [&](int p) { return ((2 * p - cut) % n2 + n2) % n2; };

  std::vector<char> in_component(is_terminal.size(), 0);
  for (int id : component_arcs) in_component[static_cast<std::size_t>(id)] = 1;

  SplicedInstance inst;
  inst.left = left;
  inst.right = right;
  inst.spans.push_back(Span{0, lin(reach->r)});
  inst.original.push_back(-1);
  inst.terminal.push_back(1);
  inst.spans.push_back(Span{lin(reach->l), n2});
  inst.original.push_back(-1);
  inst.terminal.push_back(1);
  int minority = 0;
  const Color terminal_color = colors[static_cast<std::size_t>(component_arcs.front())];
  for (Color c : colors) minority += c == terminal_color ? 1 : 0;
  for (int id = 0; id < static_cast<int>(ring.arcs.size()); ++id) {
    const auto k = static_cast<std::size_t>(id);
    if (in_component[k] || in_neighborhood[k]) continue;
    const RingArc a = ring.arcs[k];
    const Span s{lin(a.l), lin(a.r)};
    if (s.l >= s.r) throw InvariantError("splice cut severs a surviving arc");
    inst.spans.push_back(s);
    inst.original.push_back(id);
    inst.terminal.push_back(is_terminal[k]);
  }
  inst.budget = minority - (left == right ? 1 : 2);
  return inst;
}

bool CircularArcReport::attained(ArcCase c) const {
  if (best.empty()) return false;
  switch (c) {
    case ArcCase::Cut:
      return !covering;
    case ArcCase::CaseA:
      return covering && case_a.size() == best.size();
    case ArcCase::CaseB1:
      return covering && case_b1.size() == best.size();
    case ArcCase::CaseB2:
      return covering && case_b2.size() == best.size();
  }
  return false;
}

Solution bcs_case_a(const CircularArcModel& m) {
  const auto g = circular_arc_graph(m);
  const auto ring = canonical_ring(m);
  VertexSet best;
  for_each_window(ring, [&](const ArcWindow& w) {
    int reds = 0;
    for (int id : w.members) reds += g.color(id) == Color::Red ? 1 : 0;
    const int bound = 2 * std::min(reds, static_cast<int>(w.members.size()) - reds);
    if (bound <= static_cast<int>(best.size())) return;
    const auto spans = spans_by_id(g.size(), w);
    auto found = solve_window(spans, g.colors(), w.v, w.u, w.members);
    if (found.size() > best.size()) best = std::move(found);
  });
  return make_solution(g, std::move(best), kArcCaseATag);
}

Solution bcs_case_b1(const CircularArcModel& m) {
  const auto g = circular_arc_graph(m);
  const auto ring = canonical_ring(m);
  std::vector<int> all(static_cast<std::size_t>(g.size()));
  std::iota(all.begin(), all.end(), 0);
  const bool covering = ring_covered(ring, all);
  const Color minority = minority_color(g);
  const auto terminals = minority_arcs(g, minority);
  const auto best = search_windows(ring, g, minority);
  if (terminals.empty() || !best || static_cast<int>(best->size()) > static_cast<int>(terminals.size())) {
    return make_solution(g, {}, kArcCaseB1Tag);
  }
  VertexSet set(terminals.begin(), terminals.end());
  set.insert(set.end(), best->begin(), best->end());
  return make_solution(g, pad_majority(g, std::move(set), minority, covering), kArcCaseB1Tag);
}

std::optional<int> window_steiner_size(const CircularArcModel& m) {
  const auto g = circular_arc_graph(m);
  const auto best = search_windows(canonical_ring(m), g, minority_color(g));
  if (!best) return std::nullopt;
  return static_cast<int>(best->size());
}

Solution bcs_case_b2(const CircularArcModel& m) {
  const auto g = circular_arc_graph(m);
  const auto ring = canonical_ring(m);
  const Color minority = minority_color(g);
  const auto search = search_covering(ring, g, minority);
  if (search.best_size > g.count(minority)) return make_solution(g, {}, kArcCaseB2Tag);
  return finish_with_padding(g, minority, search.best_steiner, kArcCaseB2Tag);
}

std::vector<std::optional<int>> covering_steiner_by_component(const CircularArcModel& m) {
  const auto g = circular_arc_graph(m);
  const auto ring = canonical_ring(m);
  return search_covering(ring, g, minority_color(g)).per_component;
}

CircularArcReport bcs_circular_arc_report(const CircularArcModel& m) {
  CircularArcReport report;
  const auto g = circular_arc_graph(m);
  const auto ring = canonical_ring(m);
  if (g.empty()) {
    report.best = make_solution(g, {}, kArcCutTag);
    return report;
  }
  std::vector<int> all(static_cast<std::size_t>(g.size()));
  std::iota(all.begin(), all.end(), 0);
  report.covering = ring_covered(ring, all);

  if (!report.covering) {
    // Some gap after position p is uncovered; unroll the ring from p + 1.
    int gap = -1;
    for (int p = 0; p < ring.ring && gap < 0; ++p) {
      bool hit = false;
      for (const auto& a : ring.arcs) hit = hit || ring.covers_gap_after(a, p);
      if (!hit) gap = p;
    }
    std::vector<Span> spans;
    for (const auto& a : ring.arcs) {
      spans.push_back(Span{ring.offset(gap + 1, a.l), ring.offset(gap + 1, a.r)});
    }
    report.best = make_solution(g, solve_interval_instance(spans, g.colors()), kArcCutTag);
    return report;
  }

  report.case_a = bcs_case_a(m);
  report.case_b1 = bcs_case_b1(m);
  report.case_b2 = bcs_case_b2(m);
  report.best = report.case_a;
  if (report.case_b1.size() > report.best.size()) report.best = report.case_b1;
  if (report.case_b2.size() > report.best.size()) report.best = report.case_b2;
  return report;
}

Solution bcs_circular_arc(const CircularArcModel& m) { return bcs_circular_arc_report(m).best; }

}  // namespace bcs
