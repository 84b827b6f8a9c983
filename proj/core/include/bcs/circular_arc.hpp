#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bcs/geometry.hpp"
#include "bcs/graph.hpp"

namespace bcs {

/// Case-A window for an ordered pair (u, v): the arcs lying inside the
/// clockwise stretch from l(v) to r(u), plus u and v. The open gap
/// (r(u), l(v)) is avoided by every member, so cutting the circle there
/// turns the window into an interval instance.
struct ArcWindow {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet members;      // sorted
  std::vector<Span> cut;  // per member, its interval after cutting in the gap
};

/// nullopt when u or v itself does not fit inside the stretch l(v)..r(u).
std::optional<ArcWindow> arc_window(const CanonicalRing& ring, Vertex u, Vertex v);

/// Interval instance obtained from a covering model by committing the arcs
/// `left` and `right` (possibly equal) next to terminal component
/// `component`, deleting that component's neighborhood, and cutting the
/// circle inside the component. The committed coverage survives as two
/// synthetic terminal intervals at the two ends of the line.
struct SplicedInstance {
  std::vector<Span> spans;
  std::vector<Vertex> original;  // -1 for the two synthetic terminals
  std::vector<char> terminal;
  int component = 0;
  Vertex left = 0;
  Vertex right = 0;
  int budget = 0;  // minority count minus the committed arcs
};

enum class ArcCase { Cut, CaseA, CaseB1, CaseB2 };

struct CircularArcReport {
  Solution best;
  bool covering = false;
  // Filled only for covering models.
  Solution case_a;
  Solution case_b1;
  Solution case_b2;

  /// True iff `c` ran and reached the size of `best` with a nonempty result.
  bool attained(ArcCase c) const;
};

/// Case A: solution arcs leave part of the circle uncovered. Runs the
/// interval window solver on every Case-A window.
Solution bcs_case_a(const CircularArcModel& m);

/// Case B.1: all minority arcs plus Steiner arcs leave a gap. Minimum
/// interval Steiner selection over windows holding every minority arc, then
/// padding to twice the minority count.
Solution bcs_case_b1(const CircularArcModel& m);

/// Case B.2: minority arcs plus Steiner arcs wrap around the circle. For
/// every terminal component and every pair of committed neighbor arcs, the
/// spliced interval instance is solved with the greedy Steiner selection.
Solution bcs_case_b2(const CircularArcModel& m);

/// Maximum balanced connected subgraph of a circular-arc graph.
Solution bcs_circular_arc(const CircularArcModel& m);
CircularArcReport bcs_circular_arc_report(const CircularArcModel& m);

/// Per terminal component (minority color, component order by smallest id):
/// the fewest Steiner arcs found by the B.2 surgery at that component, or
/// nullopt if no splice connects. Empty when the terminals form fewer than
/// two components.
std::vector<std::optional<int>> covering_steiner_by_component(const CircularArcModel& m);

/// Fewest Steiner arcs found by the Case B.1 window search (minority arcs
/// as terminals), or nullopt if no window holding every minority arc
/// connects them.
std::optional<int> window_steiner_size(const CircularArcModel& m);

/// Builds the spliced instance; nullopt when the committed arcs together
/// with the component already cover the circle.
std::optional<SplicedInstance> splice_component(const CanonicalRing& ring,
                                                std::span<const Color> colors,
                                                std::span<const char> is_terminal,
                                                std::span<const int> component_arcs,
                                                std::span<const char> in_neighborhood,
                                                Vertex left, Vertex right);

inline constexpr const char* kArcCutTag = "circular_arc/cut";
inline constexpr const char* kArcCaseATag = "circular_arc/case_a";
inline constexpr const char* kArcCaseB1Tag = "circular_arc/case_b1";
inline constexpr const char* kArcCaseB2Tag = "circular_arc/case_b2";

}  // namespace bcs
