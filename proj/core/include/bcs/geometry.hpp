#pragma once

#include <span>
#include <vector>

#include "bcs/graph.hpp"

namespace bcs {

// ---------------------------------------------------------------------------
// Geometric models. Vertex i of a compiled graph is items[i].
// ---------------------------------------------------------------------------

struct Interval {
  double l = 0.0;
  double r = 0.0;
  Color color = Color::Red;
};

struct IntervalModel {
  std::vector<Interval> items;
  int size() const noexcept { return static_cast<int>(items.size()); }
};

/// Arc on a circle of circumference 1 (turn units), running clockwise from
/// `start` for `length`. Requires 0 <= start < 1 and 0 < length < 1.
struct Arc {
  double start = 0.0;
  double length = 0.0;
  Color color = Color::Red;
};

struct CircularArcModel {
  std::vector<Arc> items;
  int size() const noexcept { return static_cast<int>(items.size()); }
};

/// Segment joining position `top` on the upper line to `bottom` on the lower
/// line. Across a model both position sequences are permutations of 1..n.
struct Segment {
  int top = 0;
  int bottom = 0;
  Color color = Color::Red;
};

struct PermutationModel {
  std::vector<Segment> items;
  int size() const noexcept { return static_cast<int>(items.size()); }
};

enum class ShapeKind { UnitDisk, UnitSquare, Grid };

struct Point {
  double x = 0.0;
  double y = 0.0;
  Color color = Color::Red;
};

struct PointSetModel {
  ShapeKind shape = ShapeKind::UnitDisk;
  std::vector<Point> items;
  int size() const noexcept { return static_cast<int>(items.size()); }
};

// ---------------------------------------------------------------------------
// Canonical integer forms. All 2n endpoints become distinct integers; ties
// are ordered by (value, left endpoints before right endpoints, vertex id),
// which keeps closed-interval touching contacts as intersections.
// ---------------------------------------------------------------------------

/// Closed integer interval with l < r.
struct Span {
  int l = 0;
  int r = 0;
};

constexpr bool overlaps(Span a, Span b) noexcept { return a.l <= b.r && b.l <= a.r; }

/// Endpoint ranks in 0..2n-1. Throws InputError when some l >= r or a
/// coordinate is not finite.
std::vector<Span> canonical_spans(const IntervalModel& m);

/// Arc on a ring of `ring` integer positions, clockwise from l to r (l != r).
struct RingArc {
  int l = 0;
  int r = 0;
};

struct CanonicalRing {
  int ring = 0;  // 2n positions
  std::vector<RingArc> arcs;

  /// Clockwise distance from l to r, in 1..ring-1.
  int length(const RingArc& a) const noexcept { return (a.r - a.l + ring) % ring; }
  /// Clockwise offset of position p from position origin.
  int offset(int origin, int p) const noexcept { return (p - origin + ring) % ring; }
  bool contains(const RingArc& a, int p) const noexcept { return offset(a.l, p) <= length(a); }
  /// True iff the arc covers the open stretch between positions p and p+1.
  bool covers_gap_after(const RingArc& a, int p) const noexcept {
    return offset(a.l, p) < length(a);
  }
  bool overlaps(const RingArc& a, const RingArc& b) const noexcept {
    return contains(a, b.l) || contains(b, a.l);
  }
};

/// Throws InputError on start outside [0,1), length outside (0,1), or
/// non-finite values.
CanonicalRing canonical_ring(const CircularArcModel& m);

/// Every position gap of the ring is covered by at least one of the arcs.
bool ring_covered(const CanonicalRing& ring, std::span<const int> arc_ids);

// ---------------------------------------------------------------------------
// Intersection graphs.
// ---------------------------------------------------------------------------

BicoloredGraph interval_graph(const IntervalModel& m);
BicoloredGraph circular_arc_graph(const CircularArcModel& m);

/// Throws InputError when tops or bottoms are not a permutation of 1..n.
BicoloredGraph permutation_graph(const PermutationModel& m);
void check_permutation_model(const PermutationModel& m);

/// Closed disks of radius 1/2: adjacent iff centers are within distance 1.
BicoloredGraph unit_disk_graph(const PointSetModel& m);

/// Squares of side 1/sqrt(2) rotated by 45 degrees about each point (diamonds
/// of diagonal 1), then rotated back by -45 degrees and scaled by sqrt(2) to
/// axis-parallel unit squares. Adjacent iff the Chebyshev distance of the
/// transformed centers is at most 1, i.e. iff |dx| + |dy| <= 1.
BicoloredGraph unit_square_graph(const PointSetModel& m);

/// Unit grid: adjacent iff the integer points differ by 1 in exactly one
/// coordinate. Throws InputError on non-integer coordinates.
BicoloredGraph grid_graph(const PointSetModel& m);

/// Dispatches on m.shape.
BicoloredGraph point_set_graph(const PointSetModel& m);

/// True iff the union of the arcs is the whole circle.
bool arcs_cover_circle(const CircularArcModel& m);

}  // namespace bcs
